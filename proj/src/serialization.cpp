#include "rep2d/serialization.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

#include "rep2d/error.hpp"

namespace rep2d {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::parse_error, what);
}

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text.begin(), text.end());
    if (!doc.is_object()) malformed("expected a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

std::uint64_t field_uint(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field \"") + key + "\"");
  if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
    malformed(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

std::string field_string(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    malformed(std::string("field \"") + key + "\" must be a string");
  }
  return it->get<std::string>();
}

Symbol field_symbol(const json& obj) {
  const std::string s = field_string(obj, "sym");
  if (s.size() != 1 || static_cast<unsigned char>(s[0]) <= 0x20 ||
      static_cast<unsigned char>(s[0]) >= 0x7f) {
    malformed("field \"sym\" must be one printable character");
  }
  return static_cast<Symbol>(s[0]);
}

std::string symbol_text(Symbol s) { return std::string(1, static_cast<char>(s)); }

}  // namespace

std::string grammar_to_json(const Slp2D& grammar) {
  json rules = json::array();
  for (std::size_t v = 0; v < grammar.rules.size(); ++v) {
    json r{{"id", v}};
    const Rule& rule = grammar.rules[v];
    if (const auto* t = std::get_if<Terminal>(&rule)) {
      r["kind"] = "term";
      r["sym"] = symbol_text(t->sym);
    } else if (const auto* h = std::get_if<HCat>(&rule)) {
      r["kind"] = "hcat";
      r["left"] = h->left;
      r["right"] = h->right;
    } else if (const auto* c = std::get_if<VCat>(&rule)) {
      r["kind"] = "vcat";
      r["top"] = c->top;
      r["bottom"] = c->bottom;
    } else if (const auto* hr = std::get_if<HRun>(&rule)) {
      r["kind"] = "hrun";
      r["body"] = hr->body;
      r["reps"] = hr->reps;
    } else {
      const auto& vr = std::get<VRun>(rule);
      r["kind"] = "vrun";
      r["body"] = vr.body;
      r["reps"] = vr.reps;
    }
    rules.push_back(std::move(r));
  }
  return json{{"start", grammar.start}, {"rules", std::move(rules)}}.dump(1) + "\n";
}

Slp2D grammar_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const auto rules = doc.find("rules");
  if (rules == doc.end() || !rules->is_array()) malformed("field \"rules\" must be an array");

  std::map<std::uint64_t, VarId> index;
  for (const json& r : *rules) {
    if (!r.is_object()) malformed("each rule must be an object");
    const auto id = field_uint(r, "id");
    if (!index.emplace(id, static_cast<VarId>(index.size())).second) {
      malformed("rule id " + std::to_string(id) + " is defined twice");
    }
  }
  const auto ref = [&](const json& r, const char* key) {
    const auto id = field_uint(r, key);
    const auto it = index.find(id);
    if (it == index.end()) {
      throw Error(ErrorKind::dangling_reference, "reference to undefined rule " + std::to_string(id));
    }
    return it->second;
  };

  Slp2D g;
  for (const json& r : *rules) {
    const std::string kind = field_string(r, "kind");
    if (kind == "term") {
      g.rules.emplace_back(Terminal{field_symbol(r)});
    } else if (kind == "hcat") {
      g.rules.emplace_back(HCat{ref(r, "left"), ref(r, "right")});
    } else if (kind == "vcat") {
      g.rules.emplace_back(VCat{ref(r, "top"), ref(r, "bottom")});
    } else if (kind == "hrun") {
      g.rules.emplace_back(HRun{ref(r, "body"), field_uint(r, "reps")});
    } else if (kind == "vrun") {
      g.rules.emplace_back(VRun{ref(r, "body"), field_uint(r, "reps")});
    } else {
      malformed("unknown rule kind \"" + kind + "\"");
    }
  }
  g.start = ref(doc, "start");
  return g;
}

std::string scheme_to_json(const MacroScheme2D& scheme) {
  MacroScheme2D sorted = scheme;
  sorted.sort_phrases();
  json phrases = json::array();
  for (const Phrase& p : sorted.phrases) {
    if (const auto* e = std::get_if<ExplicitPhrase>(&p)) {
      phrases.push_back(
          {{"type", "explicit"}, {"i", e->pos.row}, {"j", e->pos.col}, {"sym", symbol_text(e->sym)}});
    } else {
      const auto& c = std::get<CopyPhrase>(p);
      phrases.push_back({{"type", "copy"},
                         {"i1", c.area.i1},
                         {"j1", c.area.j1},
                         {"i2", c.area.i2},
                         {"j2", c.area.j2},
                         {"si", c.source.row},
                         {"sj", c.source.col}});
    }
  }
  return json{{"m", scheme.dims.rows}, {"n", scheme.dims.cols}, {"phrases", std::move(phrases)}}
             .dump(1) +
         "\n";
}

MacroScheme2D scheme_from_json(std::string_view text) {
  const json doc = parse_document(text);
  MacroScheme2D s;
  s.dims = {field_uint(doc, "m"), field_uint(doc, "n")};
  const auto phrases = doc.find("phrases");
  if (phrases == doc.end() || !phrases->is_array()) malformed("field \"phrases\" must be an array");
  for (const json& p : *phrases) {
    if (!p.is_object()) malformed("each phrase must be an object");
    const std::string type = field_string(p, "type");
    if (type == "explicit") {
      s.phrases.emplace_back(ExplicitPhrase{{field_uint(p, "i"), field_uint(p, "j")}, field_symbol(p)});
    } else if (type == "copy") {
      s.phrases.emplace_back(CopyPhrase{
          {field_uint(p, "i1"), field_uint(p, "j1"), field_uint(p, "i2"), field_uint(p, "j2")},
          {field_uint(p, "si"), field_uint(p, "sj")}});
    } else {
      malformed("unknown phrase type \"" + type + "\"");
    }
  }
  return s;
}

std::string attractor_to_text(const AttractorSet& gamma) {
  std::string out;
  for (Position p : gamma.positions()) {
    out += std::to_string(p.row) + " " + std::to_string(p.col) + "\n";
  }
  return out;
}

AttractorSet attractor_from_text(std::string_view text) {
  std::vector<Position> positions;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    long long i = 0;
    long long j = 0;
    std::string rest;
    if (!(fields >> i >> j) || (fields >> rest) || i < 1 || j < 1) {
      malformed("attractor line " + std::to_string(number) + ": expected two positive integers");
    }
    positions.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
  }
  return AttractorSet(std::move(positions));
}

}  // namespace rep2d

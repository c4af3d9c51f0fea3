#include "rep2d/experiment.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "rep2d/attractor.hpp"
#include "rep2d/complexity.hpp"
#include "rep2d/error.hpp"
#include "rep2d/generators.hpp"
#include "rep2d/grammar.hpp"
#include "rep2d/grammar_builders.hpp"
#include "rep2d/macro_scheme.hpp"

namespace rep2d {

namespace {

using Rows = std::vector<ExperimentRow>;

double ratio(std::uint64_t num, std::uint64_t den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

ExperimentRow exact_row(std::string family, std::size_t param, std::uint64_t cells,
                        std::string measure, std::uint64_t num, std::uint64_t den,
                        std::string notes = {}) {
  return {std::move(family), param, cells, std::move(measure), num, den, ratio(num, den),
          std::move(notes)};
}

ExperimentRow real_row(std::string family, std::size_t param, std::uint64_t cells,
                       std::string measure, double value, std::string notes = {}) {
  return {std::move(family), param, cells, std::move(measure), 0, 0, value, std::move(notes)};
}

ExperimentRow ratio_row(std::string family, std::size_t param, std::uint64_t cells,
                        std::string measure, const Ratio& r) {
  return exact_row(std::move(family), param, cells, std::move(measure), r.num, r.den,
                   "witness=" + std::to_string(r.k1) + "x" + std::to_string(r.k2));
}

std::string valid_note(bool valid) { return valid ? "valid=true" : "valid=false"; }

AttractorSet identity_witness(std::size_t m) {
  std::vector<Position> positions;
  for (std::size_t i = 1; i <= m; ++i) positions.push_back({i, i});
  positions.push_back({1, m});
  return AttractorSet(std::move(positions));
}

AttractorSet identity_square_witness(std::size_t m) {
  const std::size_t c = (m + 1) / 2;
  return AttractorSet({{m, 1}, {c, c}});
}

Rows identity_delta(std::size_t m) {
  const Grid2D g = gen_identity(m);
  const auto table = complexity_table(g, m, m);
  return {ratio_row("identity", m, g.size(), "delta", delta2d(table)),
          ratio_row("identity", m, g.size(), "delta_square", delta_square(table))};
}

Rows identity_gamma(std::size_t m) {
  const Grid2D g = gen_identity(m);
  Rows rows;
  if (g.size() <= kDefaultExactAttractorCap) {
    const auto best = min_attractor_exact(g, FactorShape::rect);
    rows.push_back(exact_row("identity", m, g.size(), "gamma_exact", best.size(), 1, "exhaustive"));
  }
  const bool valid = is_attractor(g, identity_witness(m), FactorShape::rect).covered;
  rows.push_back(exact_row("identity", m, g.size(), "gamma_witness", m + 1, 1, valid_note(valid)));
  return rows;
}

Rows identity_gamma_square(std::size_t m) {
  const Grid2D g = gen_identity(m);
  Rows rows;
  if (g.size() <= kDefaultExactAttractorCap) {
    const auto best = min_attractor_exact(g, FactorShape::square);
    rows.push_back(
        exact_row("identity", m, g.size(), "gamma_square_exact", best.size(), 1, "exhaustive"));
  }
  const bool valid = is_attractor(g, identity_square_witness(m), FactorShape::square).covered;
  rows.push_back(exact_row("identity", m, g.size(), "gamma_square_witness", 2, 1, valid_note(valid)));
  return rows;
}

Rows cm_delta(std::size_t n) {
  const Grid2D g = gen_cm(n);
  const auto table = complexity_table(g, n, n);
  const Ratio d = delta2d(table);
  return {ratio_row("cm", n, g.size(), "delta_square", delta_square(table)),
          ratio_row("cm", n, g.size(), "delta", d),
          real_row("cm", n, g.size(), "delta/sqrt(n)", d.value() / std::sqrt(static_cast<double>(n)))};
}

Rows rlin_blowup(std::size_t n) {
  const Grid2D g = gen_bordered_identity(n, BorderOrder::rows_first);
  const auto line = rlin(g);
  Rows rows{ratio_row("bordered-identity", n, g.size(), "delta", delta2d(g)),
            ratio_row("bordered-identity", n, g.size(), "delta_1d_rlin", delta_1d(line)),
            real_row("bordered-identity", n, g.size(), "(n-3)/2", (static_cast<double>(n) - 3) / 2)};
  const auto identity_line = rlin(gen_identity(n));
  const std::vector<std::size_t> gamma{1, 2, n + 1};
  const bool valid = is_attractor_1d(identity_line, gamma).covered;
  rows.push_back(exact_row("identity", n, identity_line.size(), "gamma_1d_rlin_witness", 3, 1,
                           valid_note(valid)));
  return rows;
}

std::uint64_t two_ones_block_count(std::size_t k) {
  return static_cast<std::uint64_t>(k) * k * (k - 1) * (k + 1) / 4;
}

Rows ak_separation(std::size_t k) {
  const Grid2D g = gen_ak(k);
  const auto scheme = scheme_ak(k);
  const bool decodes = decode(scheme) == g;
  const std::uint64_t b = scheme.size();
  const Ratio ds = delta_square(g);
  return {exact_row("ak", k, g.size(), "b_scheme", b, 1, decodes ? "decodes=true" : "decodes=false"),
          ratio_row("ak", k, g.size(), "delta_square", ds),
          exact_row("ak", k, g.size(), "P(k,k)", p_exact(g, k, k), 1),
          exact_row("ak", k, g.size(), "two_ones_blocks", two_ones_block_count(k), 1),
          real_row("ak", k, g.size(), "delta_square/(b*k)",
                   ds.value() / static_cast<double>(b * k))};
}

Rows ak_grammar(std::size_t k) {
  const CompiledGrammar g(slp_ak(k));
  const auto& s = g.stats();
  const bool expands = g.expand() == gen_ak(k);
  const std::uint64_t cells = s.dims.rows * s.dims.cols;
  return {exact_row("ak", k, cells, "slp_size", s.size, 1, expands ? "expands=true" : "expands=false"),
          exact_row("ak", k, cells, "slp_height", s.height, 1),
          real_row("ak", k, cells, "slp_size/(k*log2(k^4))",
                   static_cast<double>(s.size) / (static_cast<double>(k) * 4 * std::log2(static_cast<double>(k))))};
}

Rows grammar_sizes(std::size_t n) {
  const CompiledGrammar g(slp_bordered_identity(n));
  const auto& s = g.stats();
  const std::uint64_t cells = n * n;
  const double log_n1 = std::log2(static_cast<double>(n - 1));
  const CompiledGrammar runs(rlslp_zeros(1, n));
  const CompiledGrammar quad(build_quadtree_slp(gen_zeros(1, n)));
  return {exact_row("bordered-identity", n, cells, "slp_size", s.size, 1),
          exact_row("bordered-identity", n, cells, "slp_height", s.height, 1),
          real_row("bordered-identity", n, cells, "4+2*log2(n-1)+6", 10 + 2 * log_n1),
          real_row("bordered-identity", n, cells, "log2(N)", std::log2(static_cast<double>(cells))),
          exact_row("zero-row", n, n, "rlslp_size", runs.stats().size, 1),
          exact_row("zero-row", n, n, "quadtree_slp_size", quad.stats().size, 1)};
}

Rows identity_macro(std::size_t n) {
  const Grid2D g = gen_identity(n);
  const auto scheme = scheme_identity(n);
  const bool decodes = decode(scheme) == g;
  const bool gamma_valid = is_attractor(g, identity_witness(n), FactorShape::rect).covered;
  const std::uint64_t b = scheme.size();
  return {exact_row("identity", n, g.size(), "b_scheme", b, 1, decodes ? "decodes=true" : "decodes=false"),
          exact_row("identity", n, g.size(), "gamma_witness", n + 1, 1, valid_note(gamma_valid)),
          real_row("identity", n, g.size(), "gamma/(b*sqrt(N))",
                   static_cast<double>(n + 1) / (static_cast<double>(b) * static_cast<double>(n)))};
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t x = from; x <= to; ++x) out.push_back(x);
  return out;
}

struct Experiment {
  std::function<Rows(std::size_t)> run;
  std::vector<std::size_t> defaults;
  std::size_t min_param;
  std::size_t max_param;
  std::function<bool(std::size_t)> accepts = [](std::size_t) { return true; };
};

bool cm_size(std::size_t n) {
  const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  return r * r == n && r % 2 == 0;
}

bool power_of_two_plus_one(std::size_t n) { return n >= 2 && std::has_single_bit(n - 1); }

const std::map<std::string, Experiment, std::less<>>& registry() {
  static const std::map<std::string, Experiment, std::less<>> experiments{
      {"identity-delta", {identity_delta, range(2, 32), 2, 128}},
      {"identity-gamma", {identity_gamma, range(3, 32), 2, 64}},
      {"identity-gamma-square", {identity_gamma_square, range(3, 64), 3, 128}},
      {"cm-delta", {cm_delta, {16, 36, 64, 100, 144}, 16, 400, cm_size}},
      {"rlin-blowup", {rlin_blowup, {8, 16, 32, 64}, 4, 128}},
      {"ak-separation", {ak_separation, range(4, 10), 4, 12}},
      {"ak-grammar", {ak_grammar, range(4, 10), 4, 16}},
      {"grammar-sizes", {grammar_sizes, {3, 5, 9, 17, 33, 65}, 2, 1025, power_of_two_plus_one}},
      {"identity-macro", {identity_macro, range(3, 32), 3, 64}},
  };
  return experiments;
}

const Experiment& lookup(std::string_view name) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) {
    throw Error(ErrorKind::invalid_argument, "unknown experiment \"" + std::string(name) + "\"");
  }
  return it->second;
}

std::size_t parse_number(std::string_view text) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::parse_error, "not a parameter: \"" + std::string(text) + "\"");
  }
  return value;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<std::size_t> default_params(std::string_view name) { return lookup(name).defaults; }

std::size_t param_cap(std::string_view name) { return lookup(name).max_param; }

std::vector<ExperimentRow> run_experiment(std::string_view name,
                                          const std::vector<std::size_t>& params) {
  const Experiment& e = lookup(name);
  for (std::size_t p : params) {
    if (p < e.min_param || p > e.max_param || !e.accepts(p)) {
      throw Error(ErrorKind::invalid_argument,
                  "parameter " + std::to_string(p) + " is outside the range of experiment " +
                      std::string(name) + " (" + std::to_string(e.min_param) + ".." +
                      std::to_string(e.max_param) + ")");
    }
  }
  Rows out;
  for (std::size_t p : params) {
    Rows rows = e.run(p);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out(kExperimentCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    const bool exact = r.den != 0;
    out += csv_escape(r.family) + ',' + std::to_string(r.param) + ',' + std::to_string(r.cells) +
           ',' + csv_escape(r.measure) + ',' + (exact ? std::to_string(r.num) : std::string()) +
           ',' + (exact ? std::to_string(r.den) : std::string()) + ',' + format_value(r.value) +
           ',' + csv_escape(r.notes) + '\n';
  }
  return out;
}

std::vector<std::size_t> parse_param_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_number(item));
    } else {
      const std::size_t lo = parse_number(item.substr(0, dots));
      const std::size_t hi = parse_number(item.substr(dots + 2));
      if (lo > hi) throw Error(ErrorKind::parse_error, "empty range \"" + std::string(item) + "\"");
      for (std::size_t x = lo; x <= hi; ++x) out.push_back(x);
    }
    start = end + 1;
  }
  return out;
}

}  // namespace rep2d

// Command-line front end: generators, measures, grammars, macro schemes and
// the experiment harness. Exit status 0 on success, 1 with
// "error: <category>: <message>" on a library error, 2 on a usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rep2d/attractor.hpp"
#include "rep2d/complexity.hpp"
#include "rep2d/error.hpp"
#include "rep2d/experiment.hpp"
#include "rep2d/generators.hpp"
#include "rep2d/grammar.hpp"
#include "rep2d/grammar_builders.hpp"
#include "rep2d/macro_scheme.hpp"
#include "rep2d/serialization.hpp"

namespace {

using namespace rep2d;

constexpr std::uint64_t kDefaultSeed = 20240601;

struct Options {
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::string input = "-";
  std::string mode = "exact";
  std::size_t kmax1 = 0;
  std::size_t kmax2 = 0;
  std::string family = "input";
  std::string shape = "rect";
  std::string attractor_file;
  std::string positions_out;
  std::size_t cap = 0;
  std::string order = "cols-first";
  std::vector<std::string> words;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string params;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + o.out);
  out << text;
}

std::size_t number(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::invalid_argument, "expected a non-negative integer, got \"" + text + "\"");
  }
}

void expect_params(const std::vector<std::string>& params, std::size_t count, const std::string& what) {
  if (params.size() != count) {
    throw Error(ErrorKind::invalid_argument,
                what + " takes " + std::to_string(count) + " parameter(s), got " +
                    std::to_string(params.size()));
  }
}

CountMode count_mode(const std::string& mode) {
  if (mode == "exact") return CountMode::exact;
  if (mode == "fingerprint") return CountMode::fingerprint;
  throw Error(ErrorKind::invalid_argument, "unknown mode \"" + mode + "\"");
}

FactorShape factor_shape(const std::string& shape) {
  if (shape == "rect") return FactorShape::rect;
  if (shape == "square") return FactorShape::square;
  throw Error(ErrorKind::invalid_argument, "unknown attractor mode \"" + shape + "\"");
}

BorderOrder border_order(const std::string& order) {
  if (order == "rows-first") return BorderOrder::rows_first;
  if (order == "cols-first") return BorderOrder::cols_first;
  throw Error(ErrorKind::invalid_argument, "unknown border order \"" + order + "\"");
}

Grid2D generate(const Options& o) {
  if (o.words.empty()) throw Error(ErrorKind::invalid_argument, "gen needs a family");
  const std::string& family = o.words.front();
  const std::vector<std::string> p(o.words.begin() + 1, o.words.end());
  if (family == "identity") {
    expect_params(p, 1, family);
    return gen_identity(number(p[0]));
  }
  if (family == "zeros") {
    expect_params(p, 2, family);
    return gen_zeros(number(p[0]), number(p[1]));
  }
  if (family == "cm") {
    expect_params(p, 1, family);
    return gen_cm(number(p[0]));
  }
  if (family == "bordered-identity") {
    expect_params(p, 1, family);
    return gen_bordered_identity(number(p[0]), border_order(o.order));
  }
  if (family == "two-ones") {
    expect_params(p, 3, family);
    return gen_two_ones_block(number(p[0]), number(p[1]), number(p[2]));
  }
  if (family == "ak") {
    expect_params(p, 1, family);
    return gen_ak(number(p[0]));
  }
  if (family == "random") {
    expect_params(p, 3, family);
    return gen_random(number(p[0]), number(p[1]), number(p[2]), o.seed);
  }
  throw Error(ErrorKind::invalid_argument, "unknown family \"" + family + "\"");
}

Slp2D build_family_grammar(const std::vector<std::string>& words) {
  if (words.empty()) throw Error(ErrorKind::invalid_argument, "slp-build family needs a name");
  const std::string& name = words.front();
  const std::vector<std::string> p(words.begin() + 1, words.end());
  if (name == "bordered-identity") {
    expect_params(p, 1, name);
    return slp_bordered_identity(number(p[0]));
  }
  if (name == "zeros") {
    expect_params(p, 2, name);
    return rlslp_zeros(number(p[0]), number(p[1]));
  }
  if (name == "ak") {
    expect_params(p, 1, name);
    return slp_ak(number(p[0]));
  }
  throw Error(ErrorKind::invalid_argument, "unknown grammar family \"" + name + "\"");
}

std::string measure_row(const Options& o, const Grid2D& g, const std::string& measure,
                        const Ratio& r) {
  std::ostringstream os;
  os << "family,m,n,measure,value_num,value_den,witness_k1,witness_k2\n"
     << csv_escape(o.family) << ',' << g.rows() << ',' << g.cols() << ',' << measure << ','
     << r.num << ',' << r.den << ',' << r.k1 << ',' << r.k2 << '\n';
  return os.str();
}

std::string coverage_row(const std::string& shape, std::size_t size, const CoverageReport& report) {
  std::string witness;
  if (report.witness) {
    const auto& w = *report.witness;
    witness = std::to_string(w.k1) + "x" + std::to_string(w.k2) + "@(" +
              std::to_string(w.occurrence.row) + ";" + std::to_string(w.occurrence.col) + ")";
  }
  return "mode,size,valid,witness\n" + shape + "," + std::to_string(size) + "," +
         (report.covered ? "true" : "false") + "," + csv_escape(witness) + "\n";
}

void save_positions(const Options& o, const AttractorSet& gamma) {
  if (o.positions_out.empty()) return;
  std::ofstream out(o.positions_out);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + o.positions_out);
  out << attractor_to_text(gamma);
}

std::string grammar_stats_csv(const GrammarStats& s, std::size_t tree_nodes) {
  return "size,height,m,n,has_runs,grammar_tree_nodes\n" + std::to_string(s.size) + "," +
         std::to_string(s.height) + "," + std::to_string(s.dims.rows) + "," +
         std::to_string(s.dims.cols) + "," + (s.has_runs ? "true" : "false") + "," +
         std::to_string(tree_nodes) + "\n";
}

// The scheme for a family instance; without a parameter the instance is
// inferred from a grid on the input, which must match the family exactly.
MacroScheme2D build_family_scheme(const Options& o) {
  if (o.words.empty()) throw Error(ErrorKind::invalid_argument, "macro-build needs a family");
  const std::string& name = o.words.front();
  if (name != "identity" && name != "ak") {
    throw Error(ErrorKind::invalid_argument, "unknown scheme family \"" + name + "\"");
  }
  const auto make = [&](std::size_t p) { return name == "identity" ? scheme_identity(p) : scheme_ak(p); };
  if (o.words.size() > 2) throw Error(ErrorKind::invalid_argument, "macro-build takes one parameter");
  if (o.words.size() == 2) return make(number(o.words[1]));

  const Grid2D g = parse_grid(read_input(o.input));
  std::size_t p = 0;
  if (name == "identity") {
    p = g.rows();
  } else {
    // A_k has k(k+2) columns.
    while ((p + 1) * (p + 3) <= g.cols()) ++p;
  }
  const Grid2D expected = name == "identity" ? gen_identity(p) : gen_ak(p);
  if (!(expected == g)) {
    throw Error(ErrorKind::invalid_argument, "input grid is not a member of family " + name);
  }
  return make(p);
}

void run(const std::string& command, const Options& o) {
  if (command == "gen") {
    write_output(o, serialize_grid(generate(o)));
  } else if (command == "delta" || command == "delta-square") {
    const Grid2D g = parse_grid(read_input(o.input));
    const std::size_t k1 = o.kmax1 == 0 ? g.rows() : std::min(o.kmax1, g.rows());
    const std::size_t k2 = o.kmax2 == 0 ? g.cols() : std::min(o.kmax2, g.cols());
    const auto table = complexity_table(g, k1, k2, count_mode(o.mode));
    const bool square = command == "delta-square";
    write_output(o, measure_row(o, g, square ? "delta_square" : "delta",
                                square ? delta_square(table) : delta2d(table)));
  } else if (command == "delta1d") {
    const Grid2D g = parse_grid(read_input(o.input));
    write_output(o, measure_row(o, g, "delta_1d", delta_1d(rlin(g))));
  } else if (command == "gamma-verify") {
    const Grid2D g = parse_grid(read_input(o.input));
    const AttractorSet gamma = attractor_from_text(read_input(o.attractor_file));
    write_output(o, coverage_row(o.shape, gamma.size(), is_attractor(g, gamma, factor_shape(o.shape))));
  } else if (command == "gamma-min" || command == "gamma-greedy") {
    const Grid2D g = parse_grid(read_input(o.input));
    const FactorShape shape = factor_shape(o.shape);
    const AttractorSet gamma = command == "gamma-min"
                                   ? min_attractor_exact(g, shape, o.cap == 0 ? kDefaultExactAttractorCap : o.cap)
                                   : greedy_attractor(g, shape);
    save_positions(o, gamma);
    write_output(o, coverage_row(o.shape, gamma.size(), is_attractor(g, gamma, shape)));
  } else if (command == "slp-validate") {
    validate(grammar_from_json(read_input(o.input)));
    write_output(o, "valid\n");
  } else if (command == "slp-stats") {
    const CompiledGrammar g(grammar_from_json(read_input(o.input)));
    write_output(o, grammar_stats_csv(g.stats(), g.grammar_tree_nodes()));
  } else if (command == "slp-expand") {
    const CompiledGrammar g(grammar_from_json(read_input(o.input)));
    write_output(o, serialize_grid(g.expand()));
  } else if (command == "slp-access") {
    const CompiledGrammar g(grammar_from_json(read_input(o.input)));
    write_output(o, std::string(1, static_cast<char>(g.access(o.i, o.j))) + "\n");
  } else if (command == "slp-build") {
    if (o.words.empty()) throw Error(ErrorKind::invalid_argument, "slp-build needs quadtree or family");
    if (o.words.front() == "quadtree") {
      if (o.words.size() != 1) throw Error(ErrorKind::invalid_argument, "slp-build quadtree reads a grid");
      write_output(o, grammar_to_json(build_quadtree_slp(parse_grid(read_input(o.input)))));
    } else if (o.words.front() == "family") {
      write_output(o, grammar_to_json(build_family_grammar({o.words.begin() + 1, o.words.end()})));
    } else {
      throw Error(ErrorKind::invalid_argument, "slp-build needs quadtree or family");
    }
  } else if (command == "macro-validate") {
    validate_scheme(scheme_from_json(read_input(o.input)));
    write_output(o, "valid\n");
  } else if (command == "macro-decode") {
    write_output(o, serialize_grid(decode(scheme_from_json(read_input(o.input)))));
  } else if (command == "macro-build") {
    write_output(o, scheme_to_json(build_family_scheme(o)));
  } else if (command == "macro-from-slp") {
    const CompiledGrammar g(grammar_from_json(read_input(o.input)));
    write_output(o, scheme_to_json(rlslp_to_macro(g)));
  } else if (command == "macro-min") {
    const Grid2D g = parse_grid(read_input(o.input));
    if (o.cap > kExactSchemeCellCap) {
      std::cerr << "warning: exact scheme search above " << kExactSchemeCellCap
                << " cells may take very long\n";
    }
    write_output(o, scheme_to_json(min_scheme_exact(g, o.cap == 0 ? kExactSchemeCellCap : o.cap)));
  } else if (command == "experiment") {
    if (o.words.size() != 1) throw Error(ErrorKind::invalid_argument, "experiment needs one name");
    const std::string& name = o.words.front();
    const auto params = o.params.empty() ? default_params(name) : parse_param_list(o.params);
    write_output(o, to_csv(run_experiment(name, params)));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-dimensional repetitiveness measures, grammars and macro schemes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "Write output to FILE instead of stdout");
  app.add_option("--seed", o.seed, "Seed for random generators")->capture_default_str();

  const auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Input file, '-' for stdin")->capture_default_str();
  };
  const auto words = [&](CLI::App* sub, const char* what) {
    sub->add_option("args", o.words, what)->required();
  };

  auto* gen = app.add_subcommand("gen", "Generate a family member as grid text");
  words(gen, "Family and parameters: identity m | zeros m n | cm n | bordered-identity n | "
             "two-ones k i j | ak k | random m n sigma");
  gen->add_option("--order", o.order, "Border order for bordered-identity: rows-first|cols-first")
      ->capture_default_str();

  for (const auto& [name, help] :
       {std::pair{"delta", "Max of P(k1,k2)/(k1 k2) over all windows, as CSV"},
        std::pair{"delta-square", "Max of P(k,k)/k^2 over square windows, as CSV"}}) {
    auto* sub = app.add_subcommand(name, help);
    input(sub);
    sub->add_option("--mode", o.mode, "exact|fingerprint")->capture_default_str();
    sub->add_option("--kmax1", o.kmax1, "Largest window height (0 = all)");
    sub->add_option("--kmax2", o.kmax2, "Largest window width (0 = all)");
    sub->add_option("--family", o.family, "Family label for the CSV row")->capture_default_str();
  }
  auto* d1 = app.add_subcommand("delta1d", "1D measure of the row-by-row linearization");
  input(d1);
  d1->add_option("--family", o.family, "Family label for the CSV row")->capture_default_str();

  auto* verify = app.add_subcommand("gamma-verify", "Check an attractor against a grid");
  input(verify);
  verify->add_option("--attractor", o.attractor_file, "File of 'i j' lines")->required();
  for (const char* name : {"gamma-min", "gamma-greedy"}) {
    auto* sub = app.add_subcommand(name, name == std::string("gamma-min")
                                             ? "Smallest attractor by exhaustive search"
                                             : "Greedy attractor");
    input(sub);
    sub->add_option("--positions", o.positions_out, "Also write the positions to FILE");
    if (name == std::string("gamma-min")) sub->add_option("--cap", o.cap, "Cell limit");
  }
  for (auto* sub : {verify, app.get_subcommand("gamma-min"), app.get_subcommand("gamma-greedy")}) {
    sub->add_option("--mode", o.shape, "rect|square")->capture_default_str();
  }

  input(app.add_subcommand("slp-validate", "Check a grammar file"));
  input(app.add_subcommand("slp-stats", "Size, height and dimensions of a grammar as CSV"));
  input(app.add_subcommand("slp-expand", "Print the grid a grammar generates"));
  auto* access = app.add_subcommand("slp-access", "Read one cell of a grammar's grid");
  access->add_option("i", o.i, "Row (1-based)")->required();
  access->add_option("j", o.j, "Column (1-based)")->required();
  input(access);
  auto* build = app.add_subcommand("slp-build", "Build a grammar");
  words(build, "quadtree | family bordered-identity n | family zeros m n | family ak k");
  build->add_option("--in", o.input, "Grid input for quadtree")->capture_default_str();

  input(app.add_subcommand("macro-validate", "Check a macro scheme file"));
  input(app.add_subcommand("macro-decode", "Print the grid a macro scheme describes"));
  input(app.add_subcommand("macro-from-slp", "Macro scheme from a grammar's grammar tree"));
  auto* mbuild = app.add_subcommand("macro-build", "Scheme for identity or ak");
  words(mbuild, "identity|ak [param]; without a parameter the grid is read from --in");
  mbuild->add_option("--in", o.input, "Grid input used to infer the parameter")->capture_default_str();
  auto* mmin = app.add_subcommand("macro-min", "Smallest scheme by exhaustive search");
  input(mmin);
  mmin->add_option("--cap", o.cap, "Cell limit");

  auto* exp = app.add_subcommand("experiment", "Run an experiment and print CSV");
  words(exp, "Experiment name");
  exp->add_option("--params", o.params, "Parameters, e.g. 3,4 or 5..32");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    run(app.get_subcommands().front()->get_name(), o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

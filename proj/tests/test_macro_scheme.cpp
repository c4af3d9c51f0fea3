#include <doctest.h>

#include <random>
#include <vector>

#include "rep2d/error.hpp"
#include "rep2d/generators.hpp"
#include "rep2d/grammar_builders.hpp"
#include "rep2d/macro_scheme.hpp"
#include "test_support.hpp"

using namespace rep2d;
using rep2d::testing::kind_of;

namespace {

ExplicitPhrase cell(std::size_t i, std::size_t j, Symbol s) { return {{i, j}, s}; }

CopyPhrase copy(Rect area, std::size_t si, std::size_t sj) { return {area, {si, sj}}; }

ErrorKind scheme_error(Dims dims, std::vector<Phrase> phrases) {
  return kind_of([&] { validate_scheme(MacroScheme2D{dims, std::move(phrases)}); });
}

}  // namespace

TEST_CASE("identity scheme") {
  for (std::size_t n = 3; n <= 40; ++n) {
    const MacroScheme2D s = scheme_identity(n);
    CHECK(s.size() == 6);
    CHECK(decode(s) == gen_identity(n));
    std::vector<Position> explicit_cells;
    for (const Phrase& p : s.phrases) {
      if (const auto* e = std::get_if<ExplicitPhrase>(&p)) explicit_cells.push_back(e->pos);
    }
    CHECK(explicit_cells == std::vector<Position>{{1, 1}, {1, 2}, {2, 1}});
  }
  CHECK(kind_of([] { scheme_identity(2); }) == ErrorKind::invalid_argument);
}

TEST_CASE("A_k scheme") {
  for (std::size_t k = 4; k <= 12; ++k) {
    const MacroScheme2D s = scheme_ak(k);
    CHECK(s.size() == 4 * (k + 1));
    CHECK(decode(s) == gen_ak(k));
  }
  CHECK(kind_of([] { scheme_ak(3); }) == ErrorKind::invalid_argument);
}

TEST_CASE("scheme validation errors") {
  const Dims row3{1, 3};
  CHECK(scheme_error(row3, {cell(1, 1, 'a'), copy({1, 2, 1, 2}, 1, 3), copy({1, 3, 1, 3}, 1, 2)}) ==
        ErrorKind::cycle);
  CHECK(scheme_error(row3, {cell(1, 1, 'a'), cell(1, 2, 'a')}) == ErrorKind::gap);
  CHECK(scheme_error(row3, {cell(1, 1, 'a'), copy({1, 1, 1, 2}, 1, 2)}) == ErrorKind::overlap);
  CHECK(scheme_error(row3, {cell(1, 1, 'a'), copy({1, 2, 1, 3}, 1, 2)}) == ErrorKind::self_source);
  CHECK(scheme_error(row3, {cell(1, 1, 'a'), copy({1, 2, 1, 3}, 1, 3)}) ==
        ErrorKind::source_out_of_bounds);
  CHECK(scheme_error(row3, {cell(1, 1, 'a'), copy({1, 2, 1, 4}, 1, 1)}) == ErrorKind::out_of_bounds);
  // Overlapping source and target is allowed when the chain ends.
  const MacroScheme2D run{row3, {cell(1, 1, 'a'), copy({1, 2, 1, 3}, 1, 1)}};
  CHECK(decode(run) == parse_grid("aaa\n"));
}

TEST_CASE("two copies reading from each other form a cycle") {
  const MacroScheme2D two_ones{{2, 2}, {copy({1, 1, 1, 1}, 2, 2), copy({2, 2, 2, 2}, 1, 1),
                                        cell(1, 2, '0'), cell(2, 1, '0')}};
  CHECK(kind_of([&] { validate_scheme(two_ones); }) == ErrorKind::cycle);
}

TEST_CASE("grammar trees give valid schemes") {
  const CompiledGrammar bordered(slp_bordered_identity(17));
  const MacroScheme2D b = rlslp_to_macro(bordered);
  CHECK(decode(b) == bordered.expand());
  CHECK(b.size() <= bordered.grammar_tree_nodes());
  const CompiledGrammar zeros(rlslp_zeros(6, 10));
  CHECK(decode(rlslp_to_macro(zeros)) == gen_zeros(6, 10));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const CompiledGrammar g(testing::random_grammar(testing::kSeed + s));
    const MacroScheme2D m = rlslp_to_macro(g);
    CHECK(m.dims == g.stats().dims);
    CHECK(m.size() <= g.grammar_tree_nodes());
    CHECK(decode(m) == g.expand());
  }
}

TEST_CASE("smallest schemes of tiny grids") {
  CHECK(min_scheme_exact(parse_grid("0\n")).size() == 1);
  CHECK(min_scheme_exact(parse_grid("00\n")).size() == 2);
  CHECK(min_scheme_exact(parse_grid("01\n")).size() == 2);
  CHECK(min_scheme_exact(gen_zeros(2, 2)).size() == 3);
  CHECK(min_scheme_exact(gen_zeros(1, 9)).size() == 2);
  std::mt19937_64 rng(testing::kSeed + 11);
  for (int trial = 0; trial < 20; ++trial) {
    const Grid2D g = gen_random(1 + rng() % 2, 1 + rng() % 3, 2, rng());
    const MacroScheme2D s = min_scheme_exact(g);
    CHECK(decode(s) == g);
    CHECK(s.size() <= g.size());
  }
  CHECK(kind_of([] { min_scheme_exact(gen_zeros(3, 4)); }) == ErrorKind::too_large);
}

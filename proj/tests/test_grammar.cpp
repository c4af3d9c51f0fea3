#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rep2d/error.hpp"
#include "rep2d/generators.hpp"
#include "rep2d/grammar.hpp"
#include "rep2d/grammar_builders.hpp"
#include "test_support.hpp"

using namespace rep2d;
using rep2d::testing::kind_of;

namespace {

// S -> A beside B with A -> a, B -> b.
Slp2D beside_ab() { return Slp2D{{Terminal{'a'}, Terminal{'b'}, HCat{0, 1}}, 2}; }

}  // namespace

TEST_CASE("a two-cell grammar") {
  const CompiledGrammar g(beside_ab());
  CHECK(g.stats().size == 3);
  CHECK(g.stats().height == 1);
  CHECK(g.stats().dims == Dims{1, 2});
  CHECK_FALSE(g.stats().has_runs);
  CHECK(g.access(1, 1) == 'a');
  CHECK(g.access(1, 2) == 'b');
  CHECK(g.expand() == Grid2D(1, 2, {'a', 'b'}));
  CHECK(g.grammar_tree_nodes() == 3);
  CHECK(kind_of([&] { (void)g.access(2, 1); }) == ErrorKind::out_of_bounds);
  CHECK(kind_of([&] { (void)g.access(1, 0); }) == ErrorKind::out_of_bounds);
}

TEST_CASE("grammar validation errors") {
  // A above B with A 1x2 and B 1x1.
  const Slp2D mismatch{{Terminal{'a'}, HCat{0, 0}, VCat{1, 0}}, 2};
  CHECK(kind_of([&] { validate(mismatch); }) == ErrorKind::dimension_mismatch);
  const Slp2D self_loop{{HCat{0, 0}}, 0};
  CHECK(kind_of([&] { validate(self_loop); }) == ErrorKind::cycle);
  const Slp2D two_loop{{Terminal{'a'}, HCat{2, 0}, VCat{1, 0}}, 1};
  CHECK(kind_of([&] { validate(two_loop); }) == ErrorKind::cycle);
  const Slp2D dangling{{Terminal{'a'}, HCat{0, 5}}, 1};
  CHECK(kind_of([&] { validate(dangling); }) == ErrorKind::dangling_reference);
  CHECK(kind_of([] { validate(Slp2D{{Terminal{'a'}}, 3}); }) == ErrorKind::dangling_reference);
  CHECK(kind_of([] { validate(Slp2D{}); }) == ErrorKind::dangling_reference);
  CHECK(kind_of([] { validate(Slp2D{{Terminal{'a'}, HRun{0, 1}}, 1}); }) == ErrorKind::invalid_run);
  CHECK(kind_of([] { validate(Slp2D{{Terminal{'a'}, VRun{0, 0}}, 1}); }) == ErrorKind::invalid_run);
}

TEST_CASE("dimension overflow is rejected") {
  std::vector<Rule> rules{Terminal{'0'}};
  for (VarId v = 0; v < 70; ++v) rules.push_back(HRun{v, 2});
  CHECK(kind_of([&] { validate(Slp2D{rules, 70}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("run rules access the body cyclically") {
  // Three copies of "ab" stacked.
  const Slp2D g{{Terminal{'a'}, Terminal{'b'}, HCat{0, 1}, VRun{2, 3}}, 3};
  const CompiledGrammar c(g);
  CHECK(c.stats().dims == Dims{3, 2});
  CHECK(c.stats().has_runs);
  CHECK(c.access(3, 1) == 'a');
  CHECK(c.access(2, 2) == 'b');
  const Slp2D h{{Terminal{'a'}, Terminal{'b'}, VCat{0, 1}, HRun{2, 4}}, 3};
  const CompiledGrammar d(h);
  CHECK(d.access(2, 4) == 'b');
  CHECK(d.expand() == parse_grid("aaaa\nbbbb\n"));
  CHECK(d.grammar_tree_nodes() == 1 + 2 + 2);
}

TEST_CASE("topological order lists children first") {
  const CompiledGrammar g(testing::random_grammar(testing::kSeed));
  std::vector<bool> seen(g.grammar().rules.size(), false);
  for (VarId v : g.topological_order()) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, HCat>) {
            CHECK(seen[r.left]);
            CHECK(seen[r.right]);
          } else if constexpr (std::is_same_v<T, VCat>) {
            CHECK(seen[r.top]);
            CHECK(seen[r.bottom]);
          } else if constexpr (std::is_same_v<T, HRun> || std::is_same_v<T, VRun>) {
            CHECK(seen[r.body]);
          }
        },
        g.grammar().rules[v]);
    seen[v] = true;
  }
}

TEST_CASE("access agrees with expansion on random grammars") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const CompiledGrammar g(testing::random_grammar(testing::kSeed + s));
    const Grid2D e = g.expand();
    REQUIRE(e.rows() == g.stats().dims.rows);
    REQUIRE(e.cols() == g.stats().dims.cols);
    for (std::size_t i = 1; i <= e.rows(); ++i) {
      for (std::size_t j = 1; j <= e.cols(); ++j) REQUIRE(g.access(i, j) == e(i, j));
    }
    // Each run costs two tree nodes, so the tree never exceeds 1 + 2 * size.
    CHECK(g.grammar_tree_nodes() <= 1 + 2 * g.stats().size);
    if (!g.stats().has_runs) CHECK(meets_size_lower_bound(g.stats()));
  }
}

TEST_CASE("mutated random grammars are rejected") {
  std::mt19937_64 rng(testing::kSeed + 7);
  for (std::uint64_t s = 0; s < 100; ++s) {
    Slp2D g = testing::random_grammar(testing::kSeed + s);
    const auto count = static_cast<VarId>(g.rules.size());
    std::vector<VarId> inner;
    for (VarId v = 0; v < count; ++v) {
      if (!std::holds_alternative<Terminal>(g.rules[v])) inner.push_back(v);
    }
    if (inner.empty()) continue;
    const VarId v = inner[rng() % inner.size()];

    Slp2D dangling = g;
    std::visit(
        [&](auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, HCat>) r.right = count;
          else if constexpr (std::is_same_v<T, VCat>) r.bottom = count;
          else if constexpr (!std::is_same_v<T, Terminal>) r.body = count;
        },
        dangling.rules[v]);
    CHECK(kind_of([&] { validate(dangling); }) == ErrorKind::dangling_reference);

    Slp2D looped = g;
    std::visit(
        [&](auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, HCat>) r.left = v;
          else if constexpr (std::is_same_v<T, VCat>) r.top = v;
          else if constexpr (!std::is_same_v<T, Terminal>) r.body = v;
        },
        looped.rules[v]);
    CHECK(kind_of([&] { validate(looped); }) == ErrorKind::cycle);
  }
}

TEST_CASE("expansion budget") {
  const Slp2D g = rlslp_zeros(1000, 1000);
  const CompiledGrammar c(g);
  CHECK(kind_of([&] { (void)c.expand(g.start, 999'999); }) == ErrorKind::budget_exceeded);
  CHECK(c.expand(g.start, 1'000'000) == gen_zeros(1000, 1000));
  CHECK(c.access(1000, 1000) == kZero);
}

TEST_CASE("builder deduplicates rules and builds powers") {
  GrammarBuilder b;
  const VarId a = b.terminal('a');
  CHECK(b.terminal('a') == a);
  const VarId aa = b.hcat(a, a);
  CHECK(b.hcat(a, a) == aa);
  CHECK(b.hrun(a, 1) == a);
  CHECK(kind_of([&] { b.hrun(a, 0); }) == ErrorKind::invalid_run);
  CHECK(kind_of([&] { b.vcat(a, aa); }) == ErrorKind::dimension_mismatch);
  const VarId p = b.hpower(a, 13);
  CHECK(b.dims(p) == Dims{1, 13});
  CHECK(CompiledGrammar(b.finish(p)).expand() == parse_grid("aaaaaaaaaaaaa\n"));
  const VarId q = b.vpower(p, 5);
  CHECK(CompiledGrammar(b.finish(q)).expand().rows() == 5);
}

TEST_CASE("bordered identity grammar") {
  // Frozen sizes and heights for n = 3, 5, 9, 17, 33, 65.
  const std::size_t ns[] = {3, 5, 9, 17, 33, 65};
  const std::size_t sizes[] = {10, 16, 23, 30, 37, 44};
  const std::size_t heights[] = {4, 6, 8, 10, 12, 14};
  for (std::size_t t = 0; t < 6; ++t) {
    const CompiledGrammar g(slp_bordered_identity(ns[t]));
    CHECK(g.stats().size == sizes[t]);
    CHECK(g.stats().height == heights[t]);
    CHECK_FALSE(g.stats().has_runs);
    CHECK(meets_size_lower_bound(g.stats()));
    CHECK(g.expand() == gen_bordered_identity(ns[t], BorderOrder::cols_first));
  }
  CHECK(kind_of([] { slp_bordered_identity(4); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { slp_bordered_identity(1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("run-length zero grammars") {
  CHECK(CompiledGrammar(rlslp_zeros(1, 1)).stats().size == 1);
  CHECK(CompiledGrammar(rlslp_zeros(1, 9)).stats().size == 2);
  const CompiledGrammar g(rlslp_zeros(4, 8));
  CHECK(g.stats().size == 3);
  CHECK(g.expand() == gen_zeros(4, 8));
  // Runs beat the run-free bound log2(32) = 5.
  CHECK_FALSE(meets_size_lower_bound(g.stats()));
}

TEST_CASE("quadtree grammars reproduce their grids") {
  std::mt19937_64 rng(testing::kSeed + 9);
  for (int trial = 0; trial < 100; ++trial) {
    const Grid2D grid = gen_random(1 + rng() % 32, 1 + rng() % 32, 2 + rng() % 2, rng());
    const CompiledGrammar g(build_quadtree_slp(grid));
    CHECK(g.expand() == grid);
    CHECK_FALSE(g.stats().has_runs);
    CHECK(g.stats().size <= 2 * grid.size());
  }
  CHECK(CompiledGrammar(build_quadtree_slp(gen_zeros(8, 8))).stats().size == 7);
  CHECK(CompiledGrammar(build_quadtree_slp(gen_zeros(1, 8))).stats().size == 4);
  CHECK(CompiledGrammar(build_quadtree_slp(gen_identity(8))).stats().size < 127);
}

TEST_CASE("A_k grammar") {
  // Frozen sizes for k = 4..12.
  const std::size_t sizes[] = {33, 43, 51, 59, 62, 69, 77, 87, 88};
  for (std::size_t k = 4; k <= 12; ++k) {
    const CompiledGrammar g(slp_ak(k));
    CHECK(g.stats().size == sizes[k - 4]);
    CHECK_FALSE(g.stats().has_runs);
    const double bound = static_cast<double>(k) * std::log2(std::pow(static_cast<double>(k), 4.0));
    CHECK(static_cast<double>(g.stats().size) <= kSlpAkSizeConstant * bound);
    if (k <= 8) CHECK(g.expand() == gen_ak(k));
  }
  CHECK(kind_of([] { slp_ak(3); }) == ErrorKind::invalid_argument);
}

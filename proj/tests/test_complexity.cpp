#include <doctest.h>

#include <algorithm>
#include <random>
#include <string_view>
#include <vector>

#include "rep2d/complexity.hpp"
#include "rep2d/error.hpp"
#include "rep2d/generators.hpp"
#include "test_support.hpp"

using namespace rep2d;

namespace {

Ratio ratio(std::uint64_t num, std::uint64_t den, std::size_t k1, std::size_t k2) {
  return Ratio{num, den, k1, k2};
}

bool same(const Ratio& a, const Ratio& b) {
  return a.num == b.num && a.den == b.den && a.k1 == b.k1 && a.k2 == b.k2;
}

}  // namespace

TEST_CASE("ratio comparison is exact") {
  CHECK(compare_values(ratio(2, 1, 1, 1), ratio(4, 2, 1, 1)) == 0);
  CHECK(compare_values(ratio(79, 20, 1, 1), ratio(3, 1, 1, 1)) > 0);
  const std::uint64_t big = std::uint64_t{1} << 62;
  CHECK(compare_values(ratio(big + 1, big, 1, 1), ratio(big, big - 1, 1, 1)) < 0);
}

TEST_CASE("window counts on small grids") {
  const Grid2D i3 = gen_identity(3);
  CHECK(p_exact(i3, 2, 2) == 3);
  CHECK(p_exact(i3, 1, 1) == 2);
  CHECK(p_exact(i3, 3, 3) == 1);
  const auto table = complexity_table(i3, 3, 3);
  CHECK(table.at(2, 2) == 3);
  CHECK_THROWS_AS(p_exact(i3, 4, 1), Error);
  CHECK_THROWS_AS(table.at(0, 1), Error);
}

TEST_CASE("exact tables, fingerprint tables and brute force agree on random grids") {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 12;
    const std::size_t n = 1 + rng() % 12;
    const std::size_t sigma = 2 + rng() % 3;
    const Grid2D g = gen_random(m, n, sigma, rng());
    const auto exact = complexity_table(g, m, n, CountMode::exact);
    const auto fp = complexity_table(g, m, n, CountMode::fingerprint);
    CHECK(exact == fp);
    for (std::size_t k1 = 1; k1 <= m; ++k1) {
      for (std::size_t k2 = 1; k2 <= n; ++k2) REQUIRE(exact.at(k1, k2) == p_exact(g, k1, k2));
    }
    CHECK(same(delta_square(g, CountMode::fingerprint), delta_square(g, CountMode::exact)));
  }
}

TEST_CASE("partial tables match the full table") {
  const Grid2D g = gen_random(9, 11, 2, 5);
  const auto full = complexity_table(g, 9, 11);
  const auto part = complexity_table(g, 4, 6);
  for (std::size_t k1 = 1; k1 <= 4; ++k1) {
    for (std::size_t k2 = 1; k2 <= 6; ++k2) CHECK(part.at(k1, k2) == full.at(k1, k2));
  }
}

TEST_CASE("window counts are bounded by positions and by the next column width") {
  // Every window off the last column extends to a wider one.
  const Grid2D g = gen_random(10, 10, 3, 77);
  const auto t = complexity_table(g, 10, 10);
  for (std::size_t k1 = 1; k1 <= 10; ++k1) {
    for (std::size_t k2 = 1; k2 <= 10; ++k2) {
      CHECK(t.at(k1, k2) <= static_cast<std::uint64_t>((11 - k1) * (11 - k2)));
      if (k2 < 10 && k1 < 10) CHECK(t.at(k1, k2) <= t.at(k1, k2 + 1) + (11 - k1));
    }
  }
}

TEST_CASE("identity matrices have delta 2 at the 1x1 window") {
  for (std::size_t m = 2; m <= 24; ++m) {
    const Ratio d = delta2d(gen_identity(m));
    CHECK(same(d, ratio(2, 1, 1, 1)));
  }
  const auto t = complexity_table(gen_identity(16), 16, 16);
  for (std::size_t k1 = 1; k1 <= 16; ++k1) {
    for (std::size_t k2 = 1; k2 <= 16; ++k2) CHECK(t.at(k1, k2) <= k1 + k2);
  }
}

TEST_CASE("cm family values") {
  // Frozen from tests/oracles/derive_values.py.
  struct Row {
    std::size_t n;
    Ratio square;
    Ratio rect;
  };
  const Row expected[] = {
      {16, ratio(3, 1, 1, 1), ratio(3, 1, 1, 1)},
      {36, ratio(3, 1, 1, 1), ratio(3, 1, 1, 1)},
      {64, ratio(3, 1, 1, 1), ratio(3, 1, 1, 1)},
      {100, ratio(3, 1, 1, 1), ratio(79, 20, 1, 20)},
      {144, ratio(3, 1, 1, 1), ratio(118, 24, 1, 24)},
  };
  for (const auto& row : expected) {
    const Grid2D g = gen_cm(row.n);
    CHECK(same(delta_square(g), row.square));
    CHECK(same(delta2d(g), row.rect));
  }
}

TEST_CASE("A_k window counts") {
  // Frozen from tests/oracles/derive_values.py.
  CHECK(p_exact(gen_ak(4), 4, 4) == 95);
  CHECK(p_exact(gen_ak(5), 5, 5) == 236);
  CHECK(p_exact(gen_ak(6), 6, 6) == 502);
  CHECK(same(delta_square(gen_ak(4)), ratio(165, 25, 5, 5)));
  CHECK(same(delta_square(gen_ak(5)), ratio(379, 36, 6, 6)));
  CHECK(same(delta_square(gen_ak(6)), ratio(758, 49, 7, 7)));
}

TEST_CASE("1D factor counts and delta") {
  const std::string_view text = "abab";
  const std::vector<Symbol> s(text.begin(), text.end());
  CHECK(factor_counts_1d(s) == std::vector<std::uint64_t>{0, 2, 2, 2, 1});
  CHECK(same(delta_1d(s), ratio(2, 1, 1, 1)));
  CHECK_THROWS_AS(factor_counts_1d({}), Error);
}

TEST_CASE("row linearization of the bordered identity") {
  // Frozen from tests/oracles/derive_values.py: n -> (num, den, k).
  struct Row {
    std::size_t n;
    Ratio d;
  };
  const Row expected[] = {{8, ratio(41, 9, 1, 9)},
                          {16, ratio(182, 20, 1, 20)},
                          {32, ratio(792, 43, 1, 43)},
                          {64, ratio(3268, 88, 1, 88)}};
  for (const auto& row : expected) {
    const Grid2D g = gen_bordered_identity(row.n, BorderOrder::rows_first);
    CHECK(same(delta_1d(rlin(g)), row.d));
    CHECK(compare_values(delta2d(g), ratio(6, 1, 1, 1)) <= 0);
  }
}

TEST_CASE("1D counts agree with 2D counts on a single row") {
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Grid2D g = gen_random(1, 1 + rng() % 40, 2 + rng() % 3, rng());
    const auto counts = factor_counts_1d(g.cells());
    for (std::size_t k = 1; k <= g.cols(); ++k) CHECK(counts[k] == p_exact(g, 1, k));
  }
}

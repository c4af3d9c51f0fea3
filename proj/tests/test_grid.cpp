#include <doctest.h>

#include <string_view>
#include <vector>

#include "rep2d/error.hpp"
#include "rep2d/generators.hpp"
#include "rep2d/grid.hpp"
#include "test_support.hpp"

using namespace rep2d;
using rep2d::testing::kind_of;

namespace {

Grid2D rows(std::initializer_list<std::string_view> lines) {
  const std::vector<std::string_view> v(lines);
  return Grid2D::from_rows(v);
}

}  // namespace

TEST_CASE("grid construction rejects empty and mismatched shapes") {
  CHECK(kind_of([] { Grid2D(0, 3, {}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { Grid2D(2, 2, {'0', '1', '0'}); }) == ErrorKind::dimension_mismatch);
  const Grid2D g(2, 3, {'a', 'b', 'c', 'd', 'e', 'f'});
  CHECK(g(1, 1) == 'a');
  CHECK(g(2, 3) == 'f');
  CHECK(g.at(2, 1) == 'd');
  CHECK(kind_of([&] { (void)g.at(3, 1); }) == ErrorKind::out_of_bounds);
  CHECK(kind_of([&] { (void)g.at(1, 0); }) == ErrorKind::out_of_bounds);
}

TEST_CASE("concatenation and subgrids") {
  const Grid2D a = rows({"ab", "cd"});
  const Grid2D b = rows({"e", "f"});
  CHECK(hcat(a, b) == rows({"abe", "cdf"}));
  CHECK(vcat(a, rows({"gh"})) == rows({"ab", "cd", "gh"}));
  CHECK(kind_of([&] { hcat(a, rows({"x"})); }) == ErrorKind::dimension_mismatch);
  CHECK(kind_of([&] { vcat(a, b); }) == ErrorKind::dimension_mismatch);
  CHECK(subgrid(a, {2, 1, 2, 2}) == rows({"cd"}));
  CHECK(kind_of([&] { subgrid(a, {1, 1, 3, 1}); }) == ErrorKind::out_of_bounds);
  CHECK(rlin(a) == std::vector<Symbol>{'a', 'b', 'c', 'd'});
}

TEST_CASE("grid text round trip") {
  const Grid2D g = rows({"01#", "1#0"});
  CHECK(serialize_grid(g) == "01#\n1#0\n");
  CHECK(parse_grid("01#\n1#0\n") == g);
  CHECK(parse_grid("01#\r\n1#0") == g);
  CHECK(kind_of([] { parse_grid(""); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_grid("01\n0\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_grid("0 1\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_grid("01\n\n01\n"); }) == ErrorKind::parse_error);
}

TEST_CASE("identity and zero generators") {
  CHECK(gen_identity(3) == rows({"100", "010", "001"}));
  CHECK(gen_zeros(2, 3) == rows({"000", "000"}));
  CHECK(kind_of([] { gen_identity(0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("bordered identity in both border orders") {
  // Frozen from tests/oracles/derive_values.py.
  CHECK(gen_bordered_identity(3, BorderOrder::rows_first) == rows({"101", "011", "001"}));
  CHECK(gen_bordered_identity(3, BorderOrder::cols_first) == rows({"101", "011", "000"}));
  const Grid2D g = gen_bordered_identity(9, BorderOrder::rows_first);
  CHECK(g(9, 9) == kOne);
  CHECK(g(9, 1) == kZero);
  CHECK(gen_bordered_identity(9, BorderOrder::cols_first)(9, 9) == kZero);
}

TEST_CASE("cm family layout") {
  const Grid2D g = gen_cm(16);
  const auto first = g.row(1);
  CHECK(std::string(first.begin(), first.end()) == "1000000011000000");
  for (std::size_t i = 2; i <= 16; ++i) {
    for (Symbol s : g.row(i)) CHECK(s == kHash);
  }
  CHECK(kind_of([] { gen_cm(15); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { gen_cm(9); }) == ErrorKind::invalid_argument);
}

TEST_CASE("A_k dimensions, borders and blocks") {
  for (std::size_t k = 4; k <= 7; ++k) {
    const Grid2D g = gen_ak(k);
    CHECK(g.rows() == 2 * k * (k - 1));
    CHECK(g.cols() == k * (k + 2));
    std::size_t ones = 0;
    for (Symbol s : g.cells()) ones += s == kOne;
    CHECK(ones == 2 * k * (k - 1));  // two per block, k blocks per band, k - 1 bands
    for (std::size_t i = 1; i <= g.rows(); ++i) {
      for (std::size_t j = 1; j <= k; ++j) {
        CHECK(g(i, j) == kZero);
        CHECK(g(i, g.cols() - j + 1) == kZero);
      }
    }
    for (std::size_t i = 2; i <= k; ++i) {
      for (std::size_t j = 1; j <= k; ++j) {
        const std::size_t top = (i - 2) * 2 * k + k + 1;
        const std::size_t left = k + (j - 1) * k + 1;
        CHECK(subgrid(g, {top, left, top + k - 1, left + k - 1}) == gen_two_ones_block(k, i, j));
      }
    }
  }
  CHECK(kind_of([] { gen_ak(3); }) == ErrorKind::invalid_argument);
}

TEST_CASE("random grids are seeded and use the first sigma symbols") {
  const Grid2D a = gen_random(5, 7, 3, 42);
  CHECK(a == gen_random(5, 7, 3, 42));
  CHECK_FALSE(a == gen_random(5, 7, 3, 43));
  for (Symbol s : a.cells()) CHECK((s == '0' || s == '1' || s == '#'));
}

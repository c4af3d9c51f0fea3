#include "rep2d/generators.hpp"

#include <random>
#include <string_view>

#include "rep2d/error.hpp"

namespace rep2d {

Grid2D gen_identity(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::invalid_argument, "identity order must be positive");
  std::vector<Symbol> cells(m * m, kZero);
  for (std::size_t i = 0; i < m; ++i) cells[i * m + i] = kOne;
  return Grid2D(m, m, std::move(cells));
}

Grid2D gen_zeros(std::size_t m, std::size_t n) { return Grid2D::filled(m, n, kZero); }

Grid2D gen_cm(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (n == 0 || r * r != n) {
    throw Error(ErrorKind::invalid_argument, "n must be a perfect square");
  }
  if (r % 2 != 0) {
    throw Error(ErrorKind::invalid_argument, "sqrt(n) must be even so the blocks tile row 1");
  }
  std::vector<Symbol> cells;
  cells.reserve(n * n);
  for (std::size_t b = 1; b <= r / 2; ++b) {
    cells.insert(cells.end(), b, kOne);
    cells.insert(cells.end(), 2 * r - b, kZero);
  }
  cells.insert(cells.end(), (n - 1) * n, kHash);
  return Grid2D(n, n, std::move(cells));
}

Grid2D gen_bordered_identity(std::size_t n, BorderOrder order) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "bordered identity needs n >= 2");
  const Grid2D base = gen_identity(n - 1);
  if (order == BorderOrder::rows_first) {
    Grid2D with_row = vcat(base, gen_zeros(1, n - 1));
    return hcat(with_row, Grid2D::filled(n, 1, kOne));
  }
  Grid2D with_col = hcat(base, Grid2D::filled(n - 1, 1, kOne));
  return vcat(with_col, gen_zeros(1, n));
}

Grid2D gen_two_ones_block(std::size_t k, std::size_t i, std::size_t j) {
  if (i < 1 || i > k || j < 1 || j > k) {
    throw Error(ErrorKind::out_of_bounds, "second '1' must lie inside the block");
  }
  std::vector<Symbol> cells(k * k, kZero);
  cells[0] = kOne;
  cells[(i - 1) * k + (j - 1)] = kOne;
  return Grid2D(k, k, std::move(cells));
}

Grid2D gen_ak(std::size_t k) {
  if (k < 4) throw Error(ErrorKind::invalid_argument, "A_k needs k >= 4");
  const Grid2D zero_strip = gen_zeros(k, k * k);
  Grid2D band = [&] {
    Grid2D row = gen_two_ones_block(k, 2, 1);
    for (std::size_t j = 2; j <= k; ++j) row = hcat(row, gen_two_ones_block(k, 2, j));
    return vcat(zero_strip, row);
  }();
  for (std::size_t i = 3; i <= k; ++i) {
    Grid2D row = gen_two_ones_block(k, i, 1);
    for (std::size_t j = 2; j <= k; ++j) row = hcat(row, gen_two_ones_block(k, i, j));
    band = vcat(band, vcat(zero_strip, row));
  }
  const Grid2D border = gen_zeros(band.rows(), k);
  return hcat(hcat(border, band), border);
}

Grid2D gen_random(std::size_t m, std::size_t n, std::size_t sigma, std::uint64_t seed) {
  static constexpr std::string_view kAlphabet = "01#abcdefghijklmnopqrstuvwxyz";
  if (sigma == 0 || sigma > kAlphabet.size()) {
    throw Error(ErrorKind::invalid_argument, "alphabet size out of range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
  std::vector<Symbol> cells(m * n);
  for (auto& c : cells) c = static_cast<Symbol>(kAlphabet[pick(rng)]);
  return Grid2D(m, n, std::move(cells));
}

}  // namespace rep2d

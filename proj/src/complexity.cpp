#include "rep2d/complexity.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "factor_naming.hpp"
#include "rep2d/error.hpp"
#include "suffix_array.hpp"

namespace rep2d {

namespace {

void check_window(std::size_t rows, std::size_t cols, std::size_t k1, std::size_t k2) {
  if (k1 < 1 || k2 < 1 || k1 > rows || k2 > cols) {
    throw Error(ErrorKind::out_of_bounds, "window " + std::to_string(k1) + "x" +
                                              std::to_string(k2) + " does not fit a " +
                                              std::to_string(rows) + "x" +
                                              std::to_string(cols) + " grid");
  }
}

// Arithmetic modulo a prime just below 2^64.
struct Modulus {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<uint128_t>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return (s < a || s >= p) ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (p - b);
  }
  std::uint64_t pow(std::uint64_t base, std::size_t e) const noexcept {
    std::uint64_t r = 1;
    while (e > 0) {
      if (e & 1U) r = mul(r, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return r;
  }
};

// One fingerprint lane: a prime modulus, a base for the row pass and a base
// for the column pass.
struct Lane {
  Modulus mod;
  std::uint64_t row_base;
  std::uint64_t col_base;
};

constexpr std::array<Lane, 2> kLanes{{
    {{18446744073709551557ULL}, 0x9e3779b97f4a7c15ULL, 0xc2b2ae3d27d4eb4fULL},
    {{18446744073709551533ULL}, 0x165667b19e3779f9ULL, 0x27d4eb2f165667c5ULL},
}};

// Rolling fingerprints of every width-k2 row window, row-major over
// m x (n - k2 + 1) origins.
std::vector<std::uint64_t> row_fingerprints(const Grid2D& grid, std::size_t k2, const Lane& lane) {
  const std::size_t m = grid.rows();
  const std::size_t n = grid.cols();
  const std::size_t w = n - k2 + 1;
  const std::uint64_t top = lane.mod.pow(lane.row_base, k2);
  std::vector<std::uint64_t> out(m * w);
  std::vector<std::uint64_t> prefix(n + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    prefix[0] = 0;
    auto row = grid.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      prefix[j + 1] = lane.mod.add(lane.mod.mul(prefix[j], lane.row_base), row[j] + 1U);
    }
    for (std::size_t j = 0; j < w; ++j) {
      out[(i - 1) * w + j] = lane.mod.sub(prefix[j + k2], lane.mod.mul(prefix[j], top));
    }
  }
  return out;
}

// Column pass of height k1 over the row fingerprints; row-major over
// (m - k1 + 1) x w origins.
std::vector<std::uint64_t> column_fingerprints(std::span<const std::uint64_t> rows_fp,
                                               std::size_t m, std::size_t w, std::size_t k1,
                                               const Lane& lane) {
  const std::size_t h = m - k1 + 1;
  const std::uint64_t top = lane.mod.pow(lane.col_base, k1);
  std::vector<std::uint64_t> out(h * w);
  std::vector<std::uint64_t> prefix(m + 1);
  for (std::size_t j = 0; j < w; ++j) {
    prefix[0] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      prefix[i + 1] = lane.mod.add(lane.mod.mul(prefix[i], lane.col_base), rows_fp[i * w + j]);
    }
    for (std::size_t i = 0; i < h; ++i) {
      out[i * w + j] = lane.mod.sub(prefix[i + k1], lane.mod.mul(prefix[i], top));
    }
  }
  return out;
}

std::uint64_t count_distinct(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> fps(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) fps[x] = {a[x], b[x]};
  std::sort(fps.begin(), fps.end());
  return static_cast<std::uint64_t>(std::unique(fps.begin(), fps.end()) - fps.begin());
}

void fill_fingerprint(const Grid2D& grid, ComplexityTable& table) {
  const std::size_t m = grid.rows();
  for (std::size_t k2 = 1; k2 <= table.kmax2(); ++k2) {
    const std::size_t w = grid.cols() - k2 + 1;
    const auto rows_a = row_fingerprints(grid, k2, kLanes[0]);
    const auto rows_b = row_fingerprints(grid, k2, kLanes[1]);
    for (std::size_t k1 = 1; k1 <= table.kmax1(); ++k1) {
      table.set(k1, k2, count_distinct(column_fingerprints(rows_a, m, w, k1, kLanes[0]),
                                       column_fingerprints(rows_b, m, w, k1, kLanes[1])));
    }
  }
}

std::uint64_t fingerprint_count(const Grid2D& grid, std::size_t k1, std::size_t k2) {
  const std::size_t m = grid.rows();
  const std::size_t w = grid.cols() - k2 + 1;
  return count_distinct(
      column_fingerprints(row_fingerprints(grid, k2, kLanes[0]), m, w, k1, kLanes[0]),
      column_fingerprints(row_fingerprints(grid, k2, kLanes[1]), m, w, k1, kLanes[1]));
}

// For fixed k1, the windows of width k2 are exactly the length-k2 factors of
// the rows of strip names, so one suffix array per k1 yields a whole row of
// the table.
void fill_exact(const Grid2D& grid, ComplexityTable& table) {
  detail::StripNames strips(grid);
  const std::size_t n = grid.cols();
  for (std::size_t k1 = 1; k1 <= table.kmax1(); ++k1) {
    if (k1 > 1) strips.grow();
    const auto ids = strips.ids();
    std::vector<std::span<const std::uint32_t>> rows;
    rows.reserve(strips.origin_rows());
    for (std::size_t i = 0; i < strips.origin_rows(); ++i) rows.push_back(ids.subspan(i * n, n));
    const auto counts = detail::distinct_factor_counts(rows, table.kmax2());
    for (std::size_t k2 = 1; k2 <= table.kmax2(); ++k2) table.set(k1, k2, counts[k2]);
  }
}

}  // namespace

ComplexityTable::ComplexityTable(std::size_t rows, std::size_t cols, std::size_t kmax1,
                                 std::size_t kmax2)
    : rows_(rows), cols_(cols), kmax1_(kmax1), kmax2_(kmax2), values_(kmax1 * kmax2, 0) {
  check_window(rows, cols, kmax1, kmax2);
}

std::uint64_t ComplexityTable::at(std::size_t k1, std::size_t k2) const {
  check_window(kmax1_, kmax2_, k1, k2);
  return values_[(k1 - 1) * kmax2_ + (k2 - 1)];
}

void ComplexityTable::set(std::size_t k1, std::size_t k2, std::uint64_t value) {
  check_window(kmax1_, kmax2_, k1, k2);
  values_[(k1 - 1) * kmax2_ + (k2 - 1)] = value;
}

std::uint64_t p_exact(const Grid2D& grid, std::size_t k1, std::size_t k2) {
  check_window(grid.rows(), grid.cols(), k1, k2);
  std::vector<std::string> windows;
  windows.reserve((grid.rows() - k1 + 1) * (grid.cols() - k2 + 1));
  for (std::size_t i = 1; i + k1 - 1 <= grid.rows(); ++i) {
    for (std::size_t j = 1; j + k2 - 1 <= grid.cols(); ++j) {
      std::string w;
      w.reserve(k1 * k2);
      for (std::size_t a = 0; a < k1; ++a) {
        auto row = grid.row(i + a).subspan(j - 1, k2);
        w.append(row.begin(), row.end());
      }
      windows.push_back(std::move(w));
    }
  }
  std::sort(windows.begin(), windows.end());
  return static_cast<std::uint64_t>(std::unique(windows.begin(), windows.end()) - windows.begin());
}

ComplexityTable complexity_table(const Grid2D& grid, std::size_t kmax1, std::size_t kmax2,
                                 CountMode mode) {
  ComplexityTable table(grid.rows(), grid.cols(), kmax1, kmax2);
  if (mode == CountMode::exact) {
    fill_exact(grid, table);
  } else {
    fill_fingerprint(grid, table);
  }
  return table;
}

Ratio delta2d(const ComplexityTable& table) {
  Ratio best{table.at(1, 1), 1, 1, 1};
  for (std::size_t k1 = 1; k1 <= table.kmax1(); ++k1) {
    for (std::size_t k2 = 1; k2 <= table.kmax2(); ++k2) {
      const Ratio r{table.at(k1, k2), static_cast<std::uint64_t>(k1 * k2), k1, k2};
      if (compare_values(r, best) > 0) best = r;
    }
  }
  return best;
}

Ratio delta2d(const Grid2D& grid, CountMode mode) {
  return delta2d(complexity_table(grid, grid.rows(), grid.cols(), mode));
}

Ratio delta_square(const ComplexityTable& table) {
  Ratio best{table.at(1, 1), 1, 1, 1};
  const std::size_t kmax = std::min(table.kmax1(), table.kmax2());
  for (std::size_t k = 2; k <= kmax; ++k) {
    const Ratio r{table.at(k, k), static_cast<std::uint64_t>(k * k), k, k};
    if (compare_values(r, best) > 0) best = r;
  }
  return best;
}

Ratio delta_square(const Grid2D& grid, CountMode mode) {
  const std::size_t kmax = std::min(grid.rows(), grid.cols());
  if (mode == CountMode::fingerprint) {
    // Only the diagonal is needed; skip the off-diagonal passes.
    Ratio best{fingerprint_count(grid, 1, 1), 1, 1, 1};
    for (std::size_t k = 2; k <= kmax; ++k) {
      const Ratio r{fingerprint_count(grid, k, k), static_cast<std::uint64_t>(k * k), k, k};
      if (compare_values(r, best) > 0) best = r;
    }
    return best;
  }
  return delta_square(complexity_table(grid, kmax, kmax, mode));
}

std::vector<std::uint64_t> factor_counts_1d(std::span<const Symbol> text) {
  if (text.empty()) throw Error(ErrorKind::invalid_argument, "delta of an empty string");
  std::vector<std::uint32_t> codes(text.begin(), text.end());
  const std::array<std::span<const std::uint32_t>, 1> strings{codes};
  return detail::distinct_factor_counts(strings, text.size());
}

Ratio delta_1d(std::span<const Symbol> text) {
  const auto counts = factor_counts_1d(text);
  Ratio best{counts[1], 1, 1, 1};
  for (std::size_t k = 2; k < counts.size(); ++k) {
    const Ratio r{counts[k], static_cast<std::uint64_t>(k), 1, k};
    if (compare_values(r, best) > 0) best = r;
  }
  return best;
}

}  // namespace rep2d

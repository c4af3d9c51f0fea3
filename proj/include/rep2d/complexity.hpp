#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rep2d/grid.hpp"

namespace rep2d {

__extension__ typedef unsigned __int128 uint128_t;

/// How complexity tables count distinct windows.
///  - exact: exact strip naming plus suffix sorting; no hashing anywhere.
///  - fingerprint: two-pass 2D rolling fingerprints over two 64-bit prime
///    moduli (128 bits per window), counting distinct fingerprints.
enum class CountMode { exact, fingerprint };

/// P(k1,k2) / (k1*k2) kept as an exact integer pair together with the
/// window shape that attains it. Comparison is by cross-multiplication.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  std::size_t k1 = 1;
  std::size_t k2 = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend std::strong_ordering compare_values(const Ratio& a, const Ratio& b) noexcept {
    const auto lhs = static_cast<uint128_t>(a.num) * b.den;
    const auto rhs = static_cast<uint128_t>(b.num) * a.den;
    return lhs <=> rhs;
  }
};

/// P_M(k1,k2) for k1 in [1..kmax1], k2 in [1..kmax2] of an m x n host grid.
class ComplexityTable {
 public:
  ComplexityTable(std::size_t rows, std::size_t cols, std::size_t kmax1, std::size_t kmax2);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t kmax1() const noexcept { return kmax1_; }
  std::size_t kmax2() const noexcept { return kmax2_; }

  std::uint64_t at(std::size_t k1, std::size_t k2) const;
  void set(std::size_t k1, std::size_t k2, std::uint64_t value);

  friend bool operator==(const ComplexityTable&, const ComplexityTable&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t kmax1_;
  std::size_t kmax2_;
  std::vector<std::uint64_t> values_;
};

/// Brute force: materializes every k1 x k2 window and counts distinct
/// contents by direct comparison. The reference for the faster routes.
std::uint64_t p_exact(const Grid2D& grid, std::size_t k1, std::size_t k2);

ComplexityTable complexity_table(const Grid2D& grid, std::size_t kmax1, std::size_t kmax2,
                                 CountMode mode = CountMode::exact);

/// Max of P(k1,k2)/(k1 k2) over the table; ties keep the smallest k1, then k2.
Ratio delta2d(const ComplexityTable& table);
Ratio delta2d(const Grid2D& grid, CountMode mode = CountMode::exact);

/// Max of P(k,k)/k^2 for k up to min(kmax1, kmax2); ties keep the smallest k.
Ratio delta_square(const ComplexityTable& table);
Ratio delta_square(const Grid2D& grid, CountMode mode = CountMode::exact);

/// result[k] = number of distinct length-k factors of `text`, k in [1..|text|].
std::vector<std::uint64_t> factor_counts_1d(std::span<const Symbol> text);

/// 1D delta: max over k of (distinct length-k factors)/k. The witness is
/// reported in k2 (k1 = 1), matching a 1 x n grid.
Ratio delta_1d(std::span<const Symbol> text);

}  // namespace rep2d

#pragma once

#include <cstddef>
#include <cstdint>

#include "rep2d/grid.hpp"

namespace rep2d {

inline constexpr Symbol kZero = '0';
inline constexpr Symbol kOne = '1';
inline constexpr Symbol kHash = '#';

/// Which border is appended first when building the bordered identity.
enum class BorderOrder {
  rows_first,  ///< zero row, then ones column: bottom-right cell is '1'
  cols_first,  ///< ones column, then zero row: bottom-right cell is '0'
};

/// Identity matrix I_m over {'0','1'}.
Grid2D gen_identity(std::size_t m);

/// All-'0' grid.
Grid2D gen_zeros(std::size_t m, std::size_t n);

/// n x n grid whose first row is B_1 B_2 ... B_{r/2} with r = sqrt(n) and
/// B_i = 1^i 0^(2r - i); every other row is '#'. Requires r even.
Grid2D gen_cm(std::size_t n);

/// I_{n-1} extended by a zero row and a ones column in the given order.
Grid2D gen_bordered_identity(std::size_t n, BorderOrder order);

/// The k x k block with a '1' at (1,1) and at (i,j), '0' elsewhere.
Grid2D gen_two_ones_block(std::size_t k, std::size_t i, std::size_t j);

/// A_k: 2k(k-1) x k(k+2) grid. The central band (columns k+1..k(k+1)) stacks,
/// for i = 2..k, a k-row zero block above B(i,1) B(i,2) ... B(i,k); k-column
/// zero borders sit left and right. Requires k >= 4.
Grid2D gen_ak(std::size_t k);

/// Uniform random grid over the first `sigma` symbols of "01#abcdef...".
Grid2D gen_random(std::size_t m, std::size_t n, std::size_t sigma, std::uint64_t seed);

}  // namespace rep2d

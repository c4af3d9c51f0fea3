#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rep2d/grid.hpp"

namespace rep2d::detail {

/// Replaces each pair (a[x], b[x]) by a dense id; equal pairs get equal ids.
/// Ids follow the lexicographic order of the pairs. Returns the id count.
std::uint32_t rename_pairs(std::span<const std::uint32_t> a, std::uint32_t bound_a,
                           std::span<const std::uint32_t> b, std::uint32_t bound_b,
                           std::vector<std::uint32_t>& out);

/// Exact names of the vertical strips of a grid. After construction the
/// height is 1; grow() extends every strip by one row. ids() is row-major
/// over the (rows - height + 1) x cols strip origins.
class StripNames {
 public:
  explicit StripNames(const Grid2D& grid);

  std::size_t height() const noexcept { return height_; }
  std::size_t origin_rows() const noexcept { return grid_.rows() - height_ + 1; }
  std::uint32_t count() const noexcept { return count_; }
  std::span<const std::uint32_t> ids() const noexcept { return ids_; }

  void grow();

 private:
  const Grid2D& grid_;
  std::size_t height_ = 1;
  std::uint32_t count_ = 0;
  std::vector<std::uint32_t> ids_;
};

/// Exact factor classes of the k1 x k2 windows for one fixed k1, widening
/// k2 from 1. ids() is row-major over the (rows - k1 + 1) x (cols - k2 + 1)
/// window origins; two windows share an id iff their contents are equal.
class WindowNames {
 public:
  explicit WindowNames(const StripNames& strips);

  std::size_t width() const noexcept { return width_; }
  std::size_t origin_rows() const noexcept { return rows_; }
  std::size_t origin_cols() const noexcept { return cols_ - width_ + 1; }
  std::uint32_t count() const noexcept { return count_; }
  std::span<const std::uint32_t> ids() const noexcept { return ids_; }

  void widen();

 private:
  const StripNames& strips_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_ = 1;
  std::uint32_t count_;
  std::vector<std::uint32_t> ids_;
};

}  // namespace rep2d::detail

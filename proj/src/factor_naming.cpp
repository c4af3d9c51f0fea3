#include "factor_naming.hpp"

#include <cassert>

namespace rep2d::detail {

std::uint32_t rename_pairs(std::span<const std::uint32_t> a, std::uint32_t bound_a,
                           std::span<const std::uint32_t> b, std::uint32_t bound_b,
                           std::vector<std::uint32_t>& out) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  out.assign(n, 0);
  if (n == 0) return 0;

  // LSD radix sort of indices by (a, b).
  std::vector<std::uint32_t> by_b(n);
  std::vector<std::uint32_t> order(n);
  {
    std::vector<std::uint32_t> count(std::size_t{bound_b} + 1, 0);
    for (std::size_t x = 0; x < n; ++x) ++count[b[x] + 1];
    for (std::size_t c = 1; c <= bound_b; ++c) count[c] += count[c - 1];
    for (std::size_t x = 0; x < n; ++x) by_b[count[b[x]]++] = static_cast<std::uint32_t>(x);
  }
  {
    std::vector<std::uint32_t> count(std::size_t{bound_a} + 1, 0);
    for (std::size_t x = 0; x < n; ++x) ++count[a[x] + 1];
    for (std::size_t c = 1; c <= bound_a; ++c) count[c] += count[c - 1];
    for (std::uint32_t x : by_b) order[count[a[x]]++] = x;
  }

  std::uint32_t id = 0;
  out[order[0]] = 0;
  for (std::size_t r = 1; r < n; ++r) {
    const auto cur = order[r];
    const auto prev = order[r - 1];
    if (a[cur] != a[prev] || b[cur] != b[prev]) ++id;
    out[cur] = id;
  }
  return id + 1;
}

StripNames::StripNames(const Grid2D& grid) : grid_(grid) {
  std::vector<std::uint32_t> symbols(grid.cells().begin(), grid.cells().end());
  std::vector<std::uint32_t> zeros(symbols.size(), 0);
  count_ = rename_pairs(symbols, 256, zeros, 1, ids_);
}

void StripNames::grow() {
  assert(height_ < grid_.rows());
  const std::size_t n = grid_.cols();
  const std::size_t origins = (grid_.rows() - height_) * n;
  // Strip of height h+1 at (i,j) = strip of height h at (i,j) over cell (i+h, j).
  std::span<const std::uint32_t> upper(ids_.data(), origins);
  std::vector<std::uint32_t> below(origins);
  const auto cells = grid_.cells();
  for (std::size_t x = 0; x < origins; ++x) below[x] = cells[x + height_ * n];
  std::vector<std::uint32_t> next;
  count_ = rename_pairs(upper, count_, below, 256, next);
  ids_ = std::move(next);
  ++height_;
}

WindowNames::WindowNames(const StripNames& strips)
    : strips_(strips),
      rows_(strips.origin_rows()),
      cols_(strips.ids().size() / strips.origin_rows()),
      count_(strips.count()),
      ids_(strips.ids().begin(), strips.ids().end()) {}

void WindowNames::widen() {
  assert(width_ < cols_);
  const std::size_t old_cols = cols_ - width_ + 1;
  const std::size_t new_cols = old_cols - 1;
  std::vector<std::uint32_t> left(rows_ * new_cols);
  std::vector<std::uint32_t> right(rows_ * new_cols);
  const auto strip = strips_.ids();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < new_cols; ++j) {
      left[i * new_cols + j] = ids_[i * old_cols + j];
      right[i * new_cols + j] = strip[i * cols_ + j + width_];
    }
  }
  std::vector<std::uint32_t> next;
  count_ = rename_pairs(left, count_, right, strips_.count(), next);
  ids_ = std::move(next);
  ++width_;
}

}  // namespace rep2d::detail

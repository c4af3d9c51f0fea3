#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rep2d {

/// One cell of a 2D string. The code is the byte of the printable ASCII
/// character used in the text format ('0' is code 48, '#' is 35, ...).
using Symbol = std::uint8_t;

/// A 1-based (row, col) cell address.
struct Position {
  std::size_t row = 1;
  std::size_t col = 1;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Inclusive 1-based rectangle [i1..i2] x [j1..j2].
struct Rect {
  std::size_t i1 = 1;
  std::size_t j1 = 1;
  std::size_t i2 = 1;
  std::size_t j2 = 1;

  std::size_t height() const noexcept { return i2 - i1 + 1; }
  std::size_t width() const noexcept { return j2 - j1 + 1; }
  std::size_t area() const noexcept { return height() * width(); }
  Position top_left() const noexcept { return {i1, j1}; }
  bool contains(Position p) const noexcept {
    return p.row >= i1 && p.row <= i2 && p.col >= j1 && p.col <= j2;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Dense m x n matrix of symbols stored row-major. Immutable after
/// construction; m and n are always at least one.
class Grid2D {
 public:
  /// Throws Error(invalid_argument) when m or n is zero and
  /// Error(dimension_mismatch) when cells.size() != m * n.
  Grid2D(std::size_t rows, std::size_t cols, std::vector<Symbol> cells);

  static Grid2D filled(std::size_t rows, std::size_t cols, Symbol symbol);
  /// A 1 x n grid holding `row`.
  static Grid2D from_row(std::span<const Symbol> row);
  /// Rows given as strings of equal length, one character per cell.
  static Grid2D from_rows(std::span<const std::string_view> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return cells_.size(); }

  /// 1-based read without bounds checks.
  Symbol operator()(std::size_t i, std::size_t j) const noexcept {
    return cells_[(i - 1) * cols_ + (j - 1)];
  }
  /// 1-based read; throws Error(out_of_bounds).
  Symbol at(std::size_t i, std::size_t j) const;

  std::span<const Symbol> cells() const noexcept { return cells_; }
  std::span<const Symbol> row(std::size_t i) const noexcept {
    return std::span<const Symbol>(cells_).subspan((i - 1) * cols_, cols_);
  }

  bool contains(Position p) const noexcept {
    return p.row >= 1 && p.row <= rows_ && p.col >= 1 && p.col <= cols_;
  }
  bool contains(const Rect& r) const noexcept {
    return r.i1 >= 1 && r.j1 >= 1 && r.i1 <= r.i2 && r.j1 <= r.j2 &&
           r.i2 <= rows_ && r.j2 <= cols_;
  }

  friend bool operator==(const Grid2D&, const Grid2D&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> cells_;
};

/// Horizontal concatenation; requires equal row counts.
Grid2D hcat(const Grid2D& left, const Grid2D& right);
/// Vertical concatenation; requires equal column counts.
Grid2D vcat(const Grid2D& top, const Grid2D& bottom);
/// Copy of the factor covered by `r`; throws Error(out_of_bounds).
Grid2D subgrid(const Grid2D& grid, const Rect& r);
/// Row-by-row linearization M[1][1..n] M[2][1..n] ... M[m][1..n].
std::vector<Symbol> rlin(const Grid2D& grid);

/// Text format: one line per row, one printable ASCII character per cell.
Grid2D parse_grid(std::string_view text);
std::string serialize_grid(const Grid2D& grid);

}  // namespace rep2d

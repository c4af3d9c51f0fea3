#include "rep2d/grid.hpp"

#include <algorithm>
#include <sstream>

#include "rep2d/error.hpp"

namespace rep2d {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::out_of_bounds: return "out_of_bounds";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::cycle: return "cycle";
    case ErrorKind::overlap: return "overlap";
    case ErrorKind::gap: return "gap";
    case ErrorKind::self_source: return "self_source";
    case ErrorKind::source_out_of_bounds: return "source_out_of_bounds";
    case ErrorKind::dangling_reference: return "dangling_reference";
    case ErrorKind::invalid_run: return "invalid_run";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::too_large: return "too_large";
  }
  return "unknown";
}

namespace {

bool printable(unsigned char c) { return c > 0x20 && c < 0x7f; }

}  // namespace

Grid2D::Grid2D(std::size_t rows, std::size_t cols, std::vector<Symbol> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::invalid_argument, "grid dimensions must be positive");
  }
  if (cells_.size() != rows_ * cols_) {
    std::ostringstream os;
    os << "expected " << rows_ * cols_ << " cells for a " << rows_ << "x"
       << cols_ << " grid, got " << cells_.size();
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
}

Grid2D Grid2D::filled(std::size_t rows, std::size_t cols, Symbol symbol) {
  return Grid2D(rows, cols, std::vector<Symbol>(rows * cols, symbol));
}

Grid2D Grid2D::from_row(std::span<const Symbol> row) {
  return Grid2D(1, row.size(), std::vector<Symbol>(row.begin(), row.end()));
}

Grid2D Grid2D::from_rows(std::span<const std::string_view> rows) {
  if (rows.empty()) {
    throw Error(ErrorKind::invalid_argument, "grid needs at least one row");
  }
  const std::size_t n = rows.front().size();
  std::vector<Symbol> cells;
  cells.reserve(rows.size() * n);
  for (std::string_view r : rows) {
    if (r.size() != n) {
      throw Error(ErrorKind::dimension_mismatch, "rows have different lengths");
    }
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return Grid2D(rows.size(), n, std::move(cells));
}

Symbol Grid2D::at(std::size_t i, std::size_t j) const {
  if (!contains(Position{i, j})) {
    std::ostringstream os;
    os << "cell (" << i << "," << j << ") outside " << rows_ << "x" << cols_;
    throw Error(ErrorKind::out_of_bounds, os.str());
  }
  return (*this)(i, j);
}

Grid2D hcat(const Grid2D& left, const Grid2D& right) {
  if (left.rows() != right.rows()) {
    throw Error(ErrorKind::dimension_mismatch,
                "horizontal concatenation needs equal row counts");
  }
  std::vector<Symbol> cells;
  cells.reserve(left.size() + right.size());
  for (std::size_t i = 1; i <= left.rows(); ++i) {
    auto a = left.row(i);
    auto b = right.row(i);
    cells.insert(cells.end(), a.begin(), a.end());
    cells.insert(cells.end(), b.begin(), b.end());
  }
  return Grid2D(left.rows(), left.cols() + right.cols(), std::move(cells));
}

Grid2D vcat(const Grid2D& top, const Grid2D& bottom) {
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorKind::dimension_mismatch,
                "vertical concatenation needs equal column counts");
  }
  std::vector<Symbol> cells(top.cells().begin(), top.cells().end());
  cells.insert(cells.end(), bottom.cells().begin(), bottom.cells().end());
  return Grid2D(top.rows() + bottom.rows(), top.cols(), std::move(cells));
}

Grid2D subgrid(const Grid2D& grid, const Rect& r) {
  if (!grid.contains(r)) {
    std::ostringstream os;
    os << "rect (" << r.i1 << "," << r.j1 << ")-(" << r.i2 << "," << r.j2
       << ") outside " << grid.rows() << "x" << grid.cols();
    throw Error(ErrorKind::out_of_bounds, os.str());
  }
  std::vector<Symbol> cells;
  cells.reserve(r.area());
  for (std::size_t i = r.i1; i <= r.i2; ++i) {
    auto row = grid.row(i).subspan(r.j1 - 1, r.width());
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Grid2D(r.height(), r.width(), std::move(cells));
}

std::vector<Symbol> rlin(const Grid2D& grid) {
  return {grid.cells().begin(), grid.cells().end()};
}

Grid2D parse_grid(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty() || (lines.size() == 1 && lines.front().empty())) {
    throw Error(ErrorKind::parse_error, "empty grid text");
  }
  const std::size_t n = lines.front().size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != n || n == 0) {
      std::ostringstream os;
      os << "ragged row " << i + 1 << ": expected " << n << " characters, got "
         << lines[i].size();
      throw Error(ErrorKind::parse_error, os.str());
    }
    auto bad = std::find_if(lines[i].begin(), lines[i].end(),
                            [](char c) { return !printable(static_cast<unsigned char>(c)); });
    if (bad != lines[i].end()) {
      std::ostringstream os;
      os << "unknown character (code " << static_cast<int>(static_cast<unsigned char>(*bad))
         << ") in row " << i + 1;
      throw Error(ErrorKind::parse_error, os.str());
    }
  }
  return Grid2D::from_rows(lines);
}

std::string serialize_grid(const Grid2D& grid) {
  std::string out;
  out.reserve(grid.size() + grid.rows());
  for (std::size_t i = 1; i <= grid.rows(); ++i) {
    for (Symbol s : grid.row(i)) {
      if (!printable(s)) {
        throw Error(ErrorKind::invalid_argument,
                    "symbol code " + std::to_string(s) + " has no text form");
      }
      out.push_back(static_cast<char>(s));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace rep2d

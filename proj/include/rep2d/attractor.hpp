#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rep2d/grid.hpp"

namespace rep2d {

/// Which factors an attractor must cover: every k1 x k2 rectangle, or only
/// k x k squares.
enum class FactorShape { rect, square };

/// A set of 1-based grid positions, kept sorted row-major without duplicates.
class AttractorSet {
 public:
  AttractorSet() = default;
  explicit AttractorSet(std::vector<Position> positions);

  const std::vector<Position>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool contains(Position p) const noexcept;

  friend bool operator==(const AttractorSet&, const AttractorSet&) = default;

 private:
  std::vector<Position> positions_;
};

/// A factor none of whose occurrences contains an attractor position.
struct UncoveredFactor {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  Position occurrence;  ///< top-left corner of the first occurrence
  Grid2D contents;
};

struct CoverageReport {
  bool covered = true;
  std::optional<UncoveredFactor> witness;  ///< set iff !covered
};

/// Checks the attractor condition layer by layer (k1 ascending, then k2).
/// The witness is the first uncovered factor class in that order, taking
/// classes by their first occurrence in row-major order.
/// Throws Error(out_of_bounds) for positions outside the grid.
CoverageReport is_attractor(const Grid2D& grid, const AttractorSet& gamma, FactorShape shape);

inline constexpr std::size_t kDefaultExactAttractorCap = 20;

/// Smallest attractor by exhaustive search: sizes 1, 2, ... and, within a
/// size, position sets in lexicographic (row-major) order; the first valid
/// set is returned. Throws Error(too_large) when rows*cols > cap; the cap
/// cannot exceed 64.
AttractorSet min_attractor_exact(const Grid2D& grid, FactorShape shape,
                                 std::size_t cap = kDefaultExactAttractorCap);

/// Set-cover greedy: repeatedly adds the position that lies in some
/// occurrence of the most still-uncovered factor classes; ties go to the
/// smallest position. Always returns an attractor.
AttractorSet greedy_attractor(const Grid2D& grid, FactorShape shape);

/// Attractor check for a 1D string with 1-based positions, using suffix
/// array intervals instead of per-length passes. A witness is reported as a
/// 1 x k factor: the shortest uncovered length, at its leftmost occurrence.
CoverageReport is_attractor_1d(std::span<const Symbol> text, std::span<const std::size_t> gamma);

/// Number of distinct factor classes the attractor condition ranges over.
std::size_t factor_class_count(const Grid2D& grid, FactorShape shape);

}  // namespace rep2d

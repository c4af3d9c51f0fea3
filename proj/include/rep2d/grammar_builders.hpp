#pragma once

#include <cstddef>
#include <map>
#include <tuple>

#include "rep2d/grammar.hpp"

namespace rep2d {

/// Incremental grammar construction. Tracks the dimensions of every
/// variable and hands back the existing variable when an identical rule is
/// requested again.
class GrammarBuilder {
 public:
  VarId terminal(Symbol sym);
  /// Throws Error(dimension_mismatch).
  VarId hcat(VarId left, VarId right);
  VarId vcat(VarId top, VarId bottom);
  /// Run rules; reps == 1 returns `body` itself, reps == 0 is invalid.
  VarId hrun(VarId body, std::size_t reps);
  VarId vrun(VarId body, std::size_t reps);
  /// `reps` copies of `body` in a row (or column) using only binary
  /// concatenations: O(log reps) new variables by repeated doubling.
  VarId hpower(VarId body, std::size_t reps);
  VarId vpower(VarId body, std::size_t reps);

  Dims dims(VarId v) const { return dims_.at(v); }
  std::size_t size() const noexcept { return rules_.size(); }

  /// The grammar with `start` as its start variable.
  Slp2D finish(VarId start) const;

 private:
  using Key = std::tuple<int, std::size_t, std::size_t>;
  VarId add(const Rule& rule, const Key& key, Dims dims);
  VarId power(VarId body, std::size_t reps, bool horizontal);

  std::vector<Rule> rules_;
  std::vector<Dims> dims_;
  std::map<Key, VarId> known_;
};

/// SLP for the bordered identity in its cols_first form: I_{n-1} built by
/// block doubling, then a ones column, then a zero row. Requires n - 1 to be
/// a power of two; throws Error(invalid_argument) otherwise.
Slp2D slp_bordered_identity(std::size_t n);

/// RLSLP with at most three variables expanding to the m x n all-'0' grid.
Slp2D rlslp_zeros(std::size_t m, std::size_t n);

/// Quadtree SLP: splits at ceil(m/2) rows and ceil(n/2) columns (only the
/// dimension larger than one when the other is one). Equal blocks share a
/// variable.
Slp2D build_quadtree_slp(const Grid2D& grid);

/// SLP for A_k assembled from 1D row gadgets, the stacked central band and
/// zero borders. Requires k >= 4.
Slp2D slp_ak(std::size_t k);

/// Observed bound on size(slp_ak(k)) / (k * log2(k^4)) for k in 4..12.
inline constexpr double kSlpAkSizeConstant = 1.1;

}  // namespace rep2d

#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "rep2d/grid.hpp"

namespace rep2d {

/// Index of a rule in Slp2D::rules.
using VarId = std::uint32_t;

struct Terminal {
  Symbol sym;
  friend bool operator==(const Terminal&, const Terminal&) = default;
};
/// exp(left) beside exp(right); both have the same row count.
struct HCat {
  VarId left;
  VarId right;
  friend bool operator==(const HCat&, const HCat&) = default;
};
/// exp(top) above exp(bottom); both have the same column count.
struct VCat {
  VarId top;
  VarId bottom;
  friend bool operator==(const VCat&, const VCat&) = default;
};
/// `reps` copies of exp(body) side by side; reps > 1.
struct HRun {
  VarId body;
  std::size_t reps;
  friend bool operator==(const HRun&, const HRun&) = default;
};
/// `reps` copies of exp(body) stacked; reps > 1.
struct VRun {
  VarId body;
  std::size_t reps;
  friend bool operator==(const VRun&, const VRun&) = default;
};

using Rule = std::variant<Terminal, HCat, VCat, HRun, VRun>;

/// A 2D SLP, or a 2D RLSLP when run rules are present. Unchecked data; see
/// CompiledGrammar for the validated form.
struct Slp2D {
  std::vector<Rule> rules;
  VarId start = 0;

  friend bool operator==(const Slp2D&, const Slp2D&) = default;
};

struct Dims {
  std::size_t rows = 1;
  std::size_t cols = 1;
  friend bool operator==(const Dims&, const Dims&) = default;
};

struct GrammarStats {
  std::size_t size = 0;    ///< number of variables
  std::size_t height = 0;  ///< longest root-to-leaf path of the start's parse tree
  Dims dims;               ///< dimensions of the generated grid
  bool has_runs = false;
};

inline constexpr std::size_t kDefaultExpandBudget = std::size_t{1} << 26;

/// A grammar that passed validation, with per-variable dimensions and
/// heights cached. Immutable.
class CompiledGrammar {
 public:
  /// Throws Error with kind dangling_reference, invalid_run, cycle or
  /// dimension_mismatch; invalid_argument when dimensions overflow.
  explicit CompiledGrammar(Slp2D grammar);

  const Slp2D& grammar() const noexcept { return grammar_; }
  const GrammarStats& stats() const noexcept { return stats_; }
  Dims dims(VarId v) const { return dims_.at(v); }
  std::size_t height(VarId v) const { return heights_.at(v); }
  /// Every variable, each one after all variables it references.
  const std::vector<VarId>& topological_order() const noexcept { return order_; }

  /// Cell (i,j) of the generated grid, descending the parse tree once.
  /// Throws Error(out_of_bounds).
  Symbol access(std::size_t i, std::size_t j) const;

  /// exp(v) as a dense grid; throws Error(budget_exceeded) above `budget`
  /// cells.
  Grid2D expand(VarId v, std::size_t budget = kDefaultExpandBudget) const;
  Grid2D expand() const { return expand(grammar_.start); }

  /// Nodes of the grammar tree: the parse tree in which every occurrence of
  /// a variable but the first is a leaf. A run node has two children, its
  /// first body and a leaf standing for the remaining copies.
  std::size_t grammar_tree_nodes() const;

 private:
  Slp2D grammar_;
  std::vector<Dims> dims_;
  std::vector<std::size_t> heights_;
  std::vector<VarId> order_;
  GrammarStats stats_;
};

/// Validates and returns the statistics of `grammar`.
GrammarStats validate(const Slp2D& grammar);

/// Whether stats satisfy the lower bound size >= log2(rows * cols) that
/// every grammar without run rules obeys.
bool meets_size_lower_bound(const GrammarStats& stats);

}  // namespace rep2d

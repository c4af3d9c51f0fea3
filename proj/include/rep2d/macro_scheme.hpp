#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "rep2d/grammar.hpp"
#include "rep2d/grid.hpp"

namespace rep2d {

/// A single cell stored literally.
struct ExplicitPhrase {
  Position pos;
  Symbol sym;
  friend bool operator==(const ExplicitPhrase&, const ExplicitPhrase&) = default;
};

/// A rectangle equal to the same-sized rectangle whose top-left is `source`.
struct CopyPhrase {
  Rect area;
  Position source;
  friend bool operator==(const CopyPhrase&, const CopyPhrase&) = default;
};

using Phrase = std::variant<ExplicitPhrase, CopyPhrase>;

Rect phrase_area(const Phrase& phrase);

/// A partition of an m x n grid into phrases. size() is the phrase count.
struct MacroScheme2D {
  Dims dims;
  std::vector<Phrase> phrases;

  std::size_t size() const noexcept { return phrases.size(); }
  /// Orders phrases row-major by top-left corner.
  void sort_phrases();

  friend bool operator==(const MacroScheme2D&, const MacroScheme2D&) = default;
};

/// Checks that the phrases tile the grid exactly, that every source
/// rectangle lies inside the grid and starts elsewhere, and that following
/// sources from any cell reaches an explicit cell. Throws Error with kind
/// overlap, gap, source_out_of_bounds, self_source or cycle; a cycle error
/// names one cell on the cycle.
void validate_scheme(const MacroScheme2D& scheme);

/// The grid the scheme describes; validates first.
Grid2D decode(const MacroScheme2D& scheme);

/// Six phrases for I_n: explicit (1,1), (1,2), (2,1) and three copies.
/// Requires n >= 3.
MacroScheme2D scheme_identity(std::size_t n);

/// 4(k+1) phrases for A_k. Requires k >= 4.
MacroScheme2D scheme_ak(std::size_t k);

/// Macro scheme read off the grammar tree: the first occurrence of each
/// variable (in left-to-right, top-to-bottom preorder) is expanded, later
/// occurrences copy it, and the copies after the first body of a run copy
/// the run shifted by one body.
MacroScheme2D rlslp_to_macro(const CompiledGrammar& grammar);

inline constexpr std::size_t kExactSchemeCellCap = 9;

/// A smallest valid scheme by exhaustive search. Tilings are tried by
/// increasing phrase count, each in a fixed order, with sources in
/// row-major order; the first valid one wins. Throws Error(too_large) above
/// `cap` cells.
MacroScheme2D min_scheme_exact(const Grid2D& grid, std::size_t cap = kExactSchemeCellCap);

}  // namespace rep2d

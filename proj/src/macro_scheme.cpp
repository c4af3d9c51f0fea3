#include "rep2d/macro_scheme.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "rep2d/error.hpp"
#include "rep2d/generators.hpp"

namespace rep2d {

namespace {

std::string cell_name(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

constexpr std::int64_t kNoPhrase = -1;

// Phrase owning each cell, after checking the tiling and the sources.
std::vector<std::int64_t> tile_owners(const MacroScheme2D& scheme) {
  const Dims d = scheme.dims;
  if (d.rows == 0 || d.cols == 0) {
    throw Error(ErrorKind::invalid_argument, "scheme dimensions must be positive");
  }
  const Grid2D bounds = Grid2D::filled(d.rows, d.cols, kZero);
  std::vector<std::int64_t> owner(d.rows * d.cols, kNoPhrase);
  for (std::size_t x = 0; x < scheme.phrases.size(); ++x) {
    const Phrase& phrase = scheme.phrases[x];
    const Rect area = phrase_area(phrase);
    if (!bounds.contains(area)) {
      throw Error(ErrorKind::out_of_bounds,
                  "phrase at " + cell_name(area.top_left()) + " extends outside the grid");
    }
    if (const auto* copy = std::get_if<CopyPhrase>(&phrase)) {
      const Rect source{copy->source.row, copy->source.col, copy->source.row + area.height() - 1,
                        copy->source.col + area.width() - 1};
      if (!bounds.contains(source)) {
        throw Error(ErrorKind::source_out_of_bounds,
                    "phrase at " + cell_name(area.top_left()) + " copies from outside the grid");
      }
      if (copy->source == area.top_left()) {
        throw Error(ErrorKind::self_source,
                    "phrase at " + cell_name(area.top_left()) + " is its own source");
      }
    }
    for (std::size_t i = area.i1; i <= area.i2; ++i) {
      for (std::size_t j = area.j1; j <= area.j2; ++j) {
        auto& o = owner[(i - 1) * d.cols + (j - 1)];
        if (o != kNoPhrase) {
          throw Error(ErrorKind::overlap, "cell " + cell_name({i, j}) + " lies in two phrases");
        }
        o = static_cast<std::int64_t>(x);
      }
    }
  }
  const auto hole = std::find(owner.begin(), owner.end(), kNoPhrase);
  if (hole != owner.end()) {
    const auto x = static_cast<std::size_t>(hole - owner.begin());
    throw Error(ErrorKind::gap, "cell " + cell_name({x / d.cols + 1, x % d.cols + 1}) +
                                    " lies in no phrase");
  }
  return owner;
}

// Follows the map from every cell, three-colouring cells as it goes, and
// fills in each cell's symbol from the explicit cell its chain ends at.
std::vector<Symbol> resolve(const MacroScheme2D& scheme) {
  const auto owner = tile_owners(scheme);
  const std::size_t n = scheme.dims.cols;
  enum : char { white, grey, black };
  std::vector<char> color(owner.size(), white);
  std::vector<Symbol> value(owner.size(), 0);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < owner.size(); ++start) {
    std::size_t cell = start;
    path.clear();
    std::optional<Symbol> found;
    while (!found) {
      if (color[cell] == black) {
        found = value[cell];
        break;
      }
      if (color[cell] == grey) {
        throw Error(ErrorKind::cycle,
                    "copy chain through cell " + cell_name({cell / n + 1, cell % n + 1}) +
                        " never reaches an explicit symbol");
      }
      color[cell] = grey;
      path.push_back(cell);
      const Phrase& phrase = scheme.phrases[static_cast<std::size_t>(owner[cell])];
      if (const auto* e = std::get_if<ExplicitPhrase>(&phrase)) {
        found = e->sym;
      } else {
        const auto& copy = std::get<CopyPhrase>(phrase);
        const std::size_t i = cell / n + 1;
        const std::size_t j = cell % n + 1;
        const std::size_t si = copy.source.row + (i - copy.area.i1);
        const std::size_t sj = copy.source.col + (j - copy.area.j1);
        cell = (si - 1) * n + (sj - 1);
      }
    }
    for (std::size_t c : path) {
      color[c] = black;
      value[c] = *found;
    }
  }
  return value;
}

void add_copy(MacroScheme2D& s, Rect area, Position source) {
  s.phrases.push_back(CopyPhrase{area, source});
}

void add_explicit(MacroScheme2D& s, Position pos, Symbol sym) {
  s.phrases.push_back(ExplicitPhrase{pos, sym});
}

}  // namespace

Rect phrase_area(const Phrase& phrase) {
  if (const auto* e = std::get_if<ExplicitPhrase>(&phrase)) {
    return {e->pos.row, e->pos.col, e->pos.row, e->pos.col};
  }
  return std::get<CopyPhrase>(phrase).area;
}

void MacroScheme2D::sort_phrases() {
  std::stable_sort(phrases.begin(), phrases.end(), [](const Phrase& a, const Phrase& b) {
    return phrase_area(a).top_left() < phrase_area(b).top_left();
  });
}

void validate_scheme(const MacroScheme2D& scheme) { resolve(scheme); }

Grid2D decode(const MacroScheme2D& scheme) {
  return Grid2D(scheme.dims.rows, scheme.dims.cols, resolve(scheme));
}

MacroScheme2D scheme_identity(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "identity scheme needs n >= 3");
  MacroScheme2D s{{n, n}, {}};
  add_explicit(s, {1, 1}, kOne);
  add_explicit(s, {1, 2}, kZero);
  add_explicit(s, {2, 1}, kZero);
  add_copy(s, {1, 3, 1, n}, {1, 2});
  add_copy(s, {3, 1, n, 1}, {2, 1});
  add_copy(s, {2, 2, n, n}, {1, 1});
  s.sort_phrases();
  return s;
}

MacroScheme2D scheme_ak(std::size_t k) {
  if (k < 4) throw Error(ErrorKind::invalid_argument, "A_k scheme needs k >= 4");
  const std::size_t m = 2 * k * (k - 1);
  const std::size_t n = k * (k + 2);
  const std::size_t band_end = k * (k + 1);  // last column of the central band
  MacroScheme2D s{{m, n}, {}};
  // Zero borders and the zero rows above the first band.
  add_explicit(s, {1, 1}, kZero);
  add_copy(s, {2, 1, k, 1}, {1, 1});
  add_copy(s, {1, 2, k, n}, {1, 1});
  add_copy(s, {k + 1, 1, m, k}, {1, 1});
  add_copy(s, {k + 1, band_end + 1, m, n}, {1, 1});
  // First occurrences of the two row types with ones.
  const Position first_row{k + 1, k + 1};
  const Position diagonal_row{k + 2, k + 1};
  add_explicit(s, first_row, kOne);
  add_copy(s, {k + 1, k + 2, k + 1, 2 * k}, {1, 1});
  add_copy(s, {k + 1, 2 * k + 1, k + 1, band_end}, first_row);
  add_explicit(s, diagonal_row, kOne);
  add_copy(s, {k + 2, k + 2, k + 2, 2 * k + 1}, {1, 1});
  add_copy(s, {k + 2, 2 * k + 2, k + 2, band_end}, diagonal_row);
  const Position zero_rows{k + 3, k + 1};
  add_copy(s, {k + 3, k + 1, 2 * k, band_end}, {1, 1});
  // Bands 3..k: zero rows (joined with the previous band's trailing ones),
  // the first block row, i - 2 zero rows, row i of the blocks.
  for (std::size_t i = 3; i <= k; ++i) {
    const std::size_t r = (i - 2) * 2 * k + 1;
    const std::size_t trailing = i == 3 ? 0 : k - i + 1;
    add_copy(s, {r - trailing, k + 1, r + k - 1, band_end}, zero_rows);
    add_copy(s, {r + k, k + 1, r + k, band_end}, first_row);
    add_copy(s, {r + k + 1, k + 1, r + k + i - 2, band_end}, zero_rows);
    add_copy(s, {r + k + i - 1, k + 1, r + k + i - 1, band_end}, diagonal_row);
  }
  s.sort_phrases();
  return s;
}

MacroScheme2D rlslp_to_macro(const CompiledGrammar& grammar) {
  const Slp2D& g = grammar.grammar();
  const Dims total = grammar.stats().dims;
  MacroScheme2D s{total, {}};
  std::vector<std::optional<Position>> first(g.rules.size());
  struct Frame {
    VarId var;
    Position at;
  };
  std::vector<Frame> stack{{g.start, {1, 1}}};
  while (!stack.empty()) {
    const auto [v, at] = stack.back();
    stack.pop_back();
    const Dims d = grammar.dims(v);
    if (first[v]) {
      add_copy(s, {at.row, at.col, at.row + d.rows - 1, at.col + d.cols - 1}, *first[v]);
      continue;
    }
    first[v] = at;
    const Rule& rule = g.rules[v];
    if (const auto* t = std::get_if<Terminal>(&rule)) {
      add_explicit(s, at, t->sym);
    } else if (const auto* r = std::get_if<HCat>(&rule)) {
      stack.push_back({r->right, {at.row, at.col + grammar.dims(r->left).cols}});
      stack.push_back({r->left, at});
    } else if (const auto* r = std::get_if<VCat>(&rule)) {
      stack.push_back({r->bottom, {at.row + grammar.dims(r->top).rows, at.col}});
      stack.push_back({r->top, at});
    } else if (const auto* r = std::get_if<HRun>(&rule)) {
      const std::size_t w = grammar.dims(r->body).cols;
      add_copy(s, {at.row, at.col + w, at.row + d.rows - 1, at.col + d.cols - 1}, at);
      stack.push_back({r->body, at});
    } else {
      const auto& run = std::get<VRun>(rule);
      const std::size_t h = grammar.dims(run.body).rows;
      add_copy(s, {at.row + h, at.col, at.row + d.rows - 1, at.col + d.cols - 1}, at);
      stack.push_back({run.body, at});
    }
  }
  s.sort_phrases();
  return s;
}

namespace {

// Exhaustive search over rectangle tilings with a fixed phrase count.
class SchemeSearch {
 public:
  explicit SchemeSearch(const Grid2D& grid)
      : grid_(grid), covered_(grid.size(), 0) {}

  std::optional<MacroScheme2D> with_phrases(std::size_t count) {
    target_ = count;
    areas_.clear();
    return tile();
  }

 private:
  std::optional<MacroScheme2D> tile() {
    const auto free_cell = std::find(covered_.begin(), covered_.end(), 0);
    if (free_cell == covered_.end()) return assign_sources();
    if (areas_.size() == target_) return std::nullopt;
    const std::size_t n = grid_.cols();
    const auto x = static_cast<std::size_t>(free_cell - covered_.begin());
    const std::size_t i = x / n + 1;
    const std::size_t j = x % n + 1;
    for (std::size_t h = 1; i + h - 1 <= grid_.rows(); ++h) {
      for (std::size_t w = 1; j + w - 1 <= n; ++w) {
        const Rect r{i, j, i + h - 1, j + w - 1};
        if (!is_free(r)) break;
        mark(r, 1);
        areas_.push_back(r);
        auto found = tile();
        areas_.pop_back();
        mark(r, 0);
        if (found) return found;
      }
    }
    return std::nullopt;
  }

  bool is_free(const Rect& r) const {
    for (std::size_t a = r.i1; a <= r.i2; ++a) {
      for (std::size_t b = r.j1; b <= r.j2; ++b) {
        if (covered_[(a - 1) * grid_.cols() + (b - 1)]) return false;
      }
    }
    return true;
  }

  void mark(const Rect& r, char value) {
    for (std::size_t a = r.i1; a <= r.i2; ++a) {
      for (std::size_t b = r.j1; b <= r.j2; ++b) covered_[(a - 1) * grid_.cols() + (b - 1)] = value;
    }
  }

  // Single cells are explicit; every other rectangle needs a source with the
  // same contents. Candidate sources are tried row-major.
  std::optional<MacroScheme2D> assign_sources() {
    std::vector<std::vector<Position>> options(areas_.size());
    for (std::size_t x = 0; x < areas_.size(); ++x) {
      const Rect& r = areas_[x];
      if (r.area() == 1) continue;
      const Grid2D want = subgrid(grid_, r);
      for (std::size_t si = 1; si + r.height() - 1 <= grid_.rows(); ++si) {
        for (std::size_t sj = 1; sj + r.width() - 1 <= grid_.cols(); ++sj) {
          const Position p{si, sj};
          if (p == r.top_left()) continue;
          if (subgrid(grid_, {si, sj, si + r.height() - 1, sj + r.width() - 1}) == want) {
            options[x].push_back(p);
          }
        }
      }
      if (options[x].empty()) return std::nullopt;
    }
    std::vector<std::size_t> choice(areas_.size(), 0);
    while (true) {
      MacroScheme2D s{{grid_.rows(), grid_.cols()}, {}};
      for (std::size_t x = 0; x < areas_.size(); ++x) {
        const Rect& r = areas_[x];
        if (r.area() == 1) {
          add_explicit(s, r.top_left(), grid_(r.i1, r.j1));
        } else {
          add_copy(s, r, options[x][choice[x]]);
        }
      }
      try {
        validate_scheme(s);
        s.sort_phrases();
        return s;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::cycle) throw;
      }
      if (!advance(choice, options)) return std::nullopt;
    }
  }

  // Mixed-radix increment, last position fastest; false after wrapping.
  static bool advance(std::vector<std::size_t>& choice,
                      const std::vector<std::vector<Position>>& options) {
    for (std::size_t x = choice.size(); x-- > 0;) {
      if (options[x].empty()) continue;
      if (++choice[x] < options[x].size()) return true;
      choice[x] = 0;
    }
    return false;
  }

  const Grid2D& grid_;
  std::vector<char> covered_;
  std::vector<Rect> areas_;
  std::size_t target_ = 0;
};

}  // namespace

MacroScheme2D min_scheme_exact(const Grid2D& grid, std::size_t cap) {
  if (grid.size() > cap) {
    throw Error(ErrorKind::too_large, "exact scheme search is limited to " + std::to_string(cap) +
                                          " cells, grid has " + std::to_string(grid.size()));
  }
  SchemeSearch search(grid);
  for (std::size_t count = 1; count <= grid.size(); ++count) {
    if (auto found = search.with_phrases(count)) return *found;
  }
  // Unreachable: the all-explicit scheme is always valid.
  throw Error(ErrorKind::invalid_argument, "no scheme found");
}

}  // namespace rep2d

#include "rep2d/attractor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "factor_naming.hpp"
#include "rep2d/error.hpp"
#include "suffix_array.hpp"

namespace rep2d {

namespace {

// Calls visit(k1, k2, names) for every window shape the attractor condition
// ranges over, k1 ascending then k2 ascending. Stops early when visit
// returns false.
template <class Visit>
void for_each_layer(const Grid2D& grid, FactorShape shape, Visit&& visit) {
  detail::StripNames strips(grid);
  const std::size_t m = grid.rows();
  const std::size_t n = grid.cols();
  const std::size_t k1_max = shape == FactorShape::square ? std::min(m, n) : m;
  for (std::size_t k1 = 1; k1 <= k1_max; ++k1) {
    if (k1 > 1) strips.grow();
    detail::WindowNames names(strips);
    const std::size_t k2_max = shape == FactorShape::square ? k1 : n;
    for (std::size_t k2 = 1; k2 <= k2_max; ++k2) {
      if (k2 > 1) names.widen();
      if (shape == FactorShape::square && k2 != k1) continue;
      if (!visit(k1, k2, names)) return;
    }
  }
}

// 2D prefix counts of attractor positions for O(1) rectangle queries.
class PositionCounts {
 public:
  PositionCounts(std::size_t m, std::size_t n, const AttractorSet& gamma)
      : n_(n), sums_((m + 1) * (n + 1), 0) {
    for (Position p : gamma.positions()) ++sums_[p.row * (n_ + 1) + p.col];
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        sums_[i * (n_ + 1) + j] += sums_[(i - 1) * (n_ + 1) + j] + sums_[i * (n_ + 1) + j - 1] -
                                   sums_[(i - 1) * (n_ + 1) + j - 1];
      }
    }
  }

  bool any_in(std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) const {
    const auto at = [&](std::size_t i, std::size_t j) { return sums_[i * (n_ + 1) + j]; };
    return at(i2, j2) - at(i1 - 1, j2) - at(i2, j1 - 1) + at(i1 - 1, j1 - 1) > 0;
  }

 private:
  std::size_t n_;
  std::vector<std::int64_t> sums_;
};

void check_positions(const Grid2D& grid, const AttractorSet& gamma) {
  for (Position p : gamma.positions()) {
    if (!grid.contains(p)) {
      throw Error(ErrorKind::out_of_bounds, "attractor position (" + std::to_string(p.row) + "," +
                                                std::to_string(p.col) + ") outside the grid");
    }
  }
}

// Covering sets as bitsets over row-major cell indices.
class CoverSets {
 public:
  CoverSets(std::size_t cells, std::size_t words_budget)
      : cells_(cells), words_((cells + 63) / 64), budget_(words_budget) {}

  std::size_t words() const noexcept { return words_; }
  std::size_t size() const noexcept { return bits_.size() / words_; }
  std::span<const std::uint64_t> set(std::size_t c) const {
    return std::span<const std::uint64_t>(bits_).subspan(c * words_, words_);
  }

  // Appends `count` empty sets and returns the index of the first one.
  std::size_t grow(std::size_t count) {
    if ((size() + count) * words_ > budget_) {
      throw Error(ErrorKind::too_large,
                  "factor classes exceed the greedy attractor memory budget");
    }
    const std::size_t first = size();
    bits_.resize(bits_.size() + count * words_, 0);
    return first;
  }

  void add_range(std::size_t c, std::size_t from, std::size_t len) {
    std::uint64_t* w = bits_.data() + c * words_;
    while (len > 0) {
      const std::size_t bit = from % 64;
      const std::size_t take = std::min<std::size_t>(64 - bit, len);
      const std::uint64_t mask = take == 64 ? ~0ULL : ((1ULL << take) - 1) << bit;
      w[from / 64] |= mask;
      from += take;
      len -= take;
    }
  }

 private:
  std::size_t cells_;
  std::size_t words_;
  std::size_t budget_;
  std::vector<std::uint64_t> bits_;
};

constexpr std::size_t kGreedyWordBudget = std::size_t{1} << 24;

}  // namespace

AttractorSet::AttractorSet(std::vector<Position> positions) : positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

bool AttractorSet::contains(Position p) const noexcept {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

CoverageReport is_attractor(const Grid2D& grid, const AttractorSet& gamma, FactorShape shape) {
  check_positions(grid, gamma);
  const PositionCounts counts(grid.rows(), grid.cols(), gamma);
  CoverageReport report;
  std::vector<char> covered;
  for_each_layer(grid, shape, [&](std::size_t k1, std::size_t k2, const detail::WindowNames& names) {
    covered.assign(names.count(), 0);
    const auto ids = names.ids();
    const std::size_t rows = names.origin_rows();
    const std::size_t cols = names.origin_cols();
    for (std::size_t i = 1; i <= rows; ++i) {
      for (std::size_t j = 1; j <= cols; ++j) {
        if (counts.any_in(i, j, i + k1 - 1, j + k2 - 1)) covered[ids[(i - 1) * cols + (j - 1)]] = 1;
      }
    }
    for (std::size_t x = 0; x < ids.size(); ++x) {
      if (!covered[ids[x]]) {
        const Position at{x / cols + 1, x % cols + 1};
        report.covered = false;
        report.witness = UncoveredFactor{
            k1, k2, at, subgrid(grid, Rect{at.row, at.col, at.row + k1 - 1, at.col + k2 - 1})};
        return false;
      }
    }
    return true;
  });
  return report;
}

AttractorSet min_attractor_exact(const Grid2D& grid, FactorShape shape, std::size_t cap) {
  const std::size_t m = grid.rows();
  const std::size_t n = grid.cols();
  const std::size_t cells = m * n;
  if (cells > cap || cells > 64) {
    throw Error(ErrorKind::too_large, "exact attractor search is limited to " +
                                          std::to_string(std::min<std::size_t>(cap, 64)) +
                                          " cells, grid has " + std::to_string(cells));
  }

  // One mask per factor class: the cells lying in at least one occurrence.
  std::vector<std::uint64_t> masks;
  for_each_layer(grid, shape, [&](std::size_t k1, std::size_t k2, const detail::WindowNames& names) {
    std::vector<std::uint64_t> layer(names.count(), 0);
    const auto ids = names.ids();
    const std::size_t cols = names.origin_cols();
    for (std::size_t x = 0; x < ids.size(); ++x) {
      const std::size_t i = x / cols;
      const std::size_t j = x % cols;
      std::uint64_t rect = 0;
      for (std::size_t a = 0; a < k1; ++a) {
        for (std::size_t b = 0; b < k2; ++b) rect |= 1ULL << ((i + a) * n + (j + b));
      }
      layer[ids[x]] |= rect;
    }
    masks.insert(masks.end(), layer.begin(), layer.end());
    return true;
  });

  // A class whose mask contains another class's mask is implied by it.
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> needed;
  for (std::uint64_t mask : masks) {
    const bool implied = std::any_of(needed.begin(), needed.end(),
                                     [&](std::uint64_t k) { return (k & mask) == k; });
    if (!implied) needed.push_back(mask);
  }

  const auto hits_all = [&](std::uint64_t chosen) {
    return std::all_of(needed.begin(), needed.end(),
                       [&](std::uint64_t mask) { return (mask & chosen) != 0; });
  };

  for (std::size_t size = 1; size <= cells; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t x = 0; x < size; ++x) pick[x] = x;
    while (true) {
      std::uint64_t chosen = 0;
      for (std::size_t x : pick) chosen |= 1ULL << x;
      if (hits_all(chosen)) {
        std::vector<Position> positions;
        for (std::size_t x : pick) positions.push_back({x / n + 1, x % n + 1});
        return AttractorSet(std::move(positions));
      }
      // Next combination in lexicographic order.
      std::size_t x = size;
      while (x > 0 && pick[x - 1] == cells - size + x - 1) --x;
      if (x == 0) break;
      ++pick[x - 1];
      for (std::size_t y = x; y < size; ++y) pick[y] = pick[y - 1] + 1;
    }
  }
  // Unreachable: the full position set always covers every class.
  throw Error(ErrorKind::invalid_argument, "no attractor found");
}

AttractorSet greedy_attractor(const Grid2D& grid, FactorShape shape) {
  const std::size_t n = grid.cols();
  const std::size_t cells = grid.size();
  CoverSets sets(cells, kGreedyWordBudget);
  for_each_layer(grid, shape, [&](std::size_t k1, std::size_t k2, const detail::WindowNames& names) {
    const std::size_t first = sets.grow(names.count());
    const auto ids = names.ids();
    const std::size_t cols = names.origin_cols();
    for (std::size_t x = 0; x < ids.size(); ++x) {
      const std::size_t i = x / cols;
      const std::size_t j = x % cols;
      for (std::size_t a = 0; a < k1; ++a) sets.add_range(first + ids[x], (i + a) * n + j, k2);
    }
    return true;
  });

  const std::size_t classes = sets.size();
  std::vector<std::int64_t> gain(cells, 0);
  const auto for_each_bit = [&](std::size_t c, auto&& f) {
    const auto words = sets.set(c);
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  };
  for (std::size_t c = 0; c < classes; ++c) for_each_bit(c, [&](std::size_t p) { ++gain[p]; });

  std::vector<char> done(classes, 0);
  std::size_t remaining = classes;
  std::vector<Position> chosen;
  while (remaining > 0) {
    const std::size_t best =
        static_cast<std::size_t>(std::max_element(gain.begin(), gain.end()) - gain.begin());
    chosen.push_back({best / n + 1, best % n + 1});
    for (std::size_t c = 0; c < classes; ++c) {
      if (done[c] || ((sets.set(c)[best / 64] >> (best % 64)) & 1U) == 0) continue;
      done[c] = 1;
      --remaining;
      for_each_bit(c, [&](std::size_t p) { --gain[p]; });
    }
  }
  return AttractorSet(std::move(chosen));
}

CoverageReport is_attractor_1d(std::span<const Symbol> text, std::span<const std::size_t> gamma) {
  const std::size_t n = text.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "attractor check on an empty string");
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // reach[s]: distance from s to the nearest attractor position at or after s.
  std::vector<char> marked(n, 0);
  for (std::size_t p : gamma) {
    if (p < 1 || p > n) {
      throw Error(ErrorKind::out_of_bounds,
                  "attractor position " + std::to_string(p) + " outside a string of length " +
                      std::to_string(n));
    }
    marked[p - 1] = 1;
  }
  std::vector<std::size_t> reach(n, kNone);
  for (std::size_t s = n; s-- > 0;) {
    if (marked[s]) {
      reach[s] = 0;
    } else if (s + 1 < n && reach[s + 1] != kNone) {
      reach[s] = reach[s + 1] + 1;
    }
  }

  const std::vector<std::uint32_t> codes(text.begin(), text.end());
  const auto sa = detail::suffix_array(codes);
  const auto lcp = detail::lcp_array(codes, sa);
  const auto lcp_at = [&](std::size_t r) -> std::size_t { return r < n ? lcp[r] : 0; };

  // Factors of length parent+1 .. depth all occur exactly at the suffixes of
  // one interval; they are covered iff some occurrence reaches an attractor
  // position within `parent` steps.
  std::size_t best_len = kNone;
  std::size_t best_pos = 0;
  const auto consider = [&](std::size_t parent, std::size_t min_reach, std::size_t min_pos) {
    if (min_reach != kNone && min_reach <= parent) return;
    if (parent + 1 < best_len || (parent + 1 == best_len && min_pos < best_pos)) {
      best_len = parent + 1;
      best_pos = min_pos;
    }
  };

  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t s = sa[r];
    const std::size_t shared = std::max(r > 0 ? lcp_at(r) : 0, lcp_at(r + 1));
    if (n - s > shared) consider(shared, reach[s], s);
  }

  struct Interval {
    std::size_t depth;
    std::size_t lb;
    std::size_t min_reach;
    std::size_t min_pos;
  };
  std::vector<Interval> stack{{0, 0, kNone, kNone}};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t depth = lcp_at(r);
    std::size_t lb = r - 1;
    std::size_t min_reach = reach[sa[r - 1]];
    std::size_t min_pos = sa[r - 1];
    while (depth < stack.back().depth) {
      Interval top = stack.back();
      stack.pop_back();
      top.min_reach = std::min(top.min_reach, min_reach);
      top.min_pos = std::min(top.min_pos, min_pos);
      const std::size_t parent = std::max(top.lb > 0 ? lcp_at(top.lb) : 0, lcp_at(r));
      consider(parent, top.min_reach, top.min_pos);
      lb = top.lb;
      min_reach = top.min_reach;
      min_pos = top.min_pos;
    }
    if (depth > stack.back().depth) {
      stack.push_back({depth, lb, min_reach, min_pos});
    } else {
      stack.back().min_reach = std::min(stack.back().min_reach, min_reach);
      stack.back().min_pos = std::min(stack.back().min_pos, min_pos);
    }
  }

  CoverageReport report;
  if (best_len != kNone) {
    report.covered = false;
    const Grid2D row = Grid2D::from_row(text);
    report.witness = UncoveredFactor{1, best_len, Position{1, best_pos + 1},
                                     subgrid(row, Rect{1, best_pos + 1, 1, best_pos + best_len})};
  }
  return report;
}

std::size_t factor_class_count(const Grid2D& grid, FactorShape shape) {
  std::size_t total = 0;
  for_each_layer(grid, shape, [&](std::size_t, std::size_t, const detail::WindowNames& names) {
    total += names.count();
    return true;
  });
  return total;
}

}  // namespace rep2d

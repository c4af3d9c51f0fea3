#include "rep2d/grammar_builders.hpp"

#include <bit>
#include <map>
#include <string>

#include "rep2d/error.hpp"
#include "rep2d/generators.hpp"

namespace rep2d {

namespace {

enum RuleKind { kTerminal, kHCat, kVCat, kHRun, kVRun };

}  // namespace

VarId GrammarBuilder::add(const Rule& rule, const Key& key, Dims dims) {
  if (auto it = known_.find(key); it != known_.end()) return it->second;
  const auto id = static_cast<VarId>(rules_.size());
  rules_.push_back(rule);
  dims_.push_back(dims);
  known_.emplace(key, id);
  return id;
}

VarId GrammarBuilder::terminal(Symbol sym) {
  return add(Terminal{sym}, {kTerminal, sym, 0}, {1, 1});
}

VarId GrammarBuilder::hcat(VarId left, VarId right) {
  const Dims a = dims(left);
  const Dims b = dims(right);
  if (a.rows != b.rows) {
    throw Error(ErrorKind::dimension_mismatch, "horizontal parts differ in row count");
  }
  return add(HCat{left, right}, {kHCat, left, right}, {a.rows, a.cols + b.cols});
}

VarId GrammarBuilder::vcat(VarId top, VarId bottom) {
  const Dims a = dims(top);
  const Dims b = dims(bottom);
  if (a.cols != b.cols) {
    throw Error(ErrorKind::dimension_mismatch, "vertical parts differ in column count");
  }
  return add(VCat{top, bottom}, {kVCat, top, bottom}, {a.rows + b.rows, a.cols});
}

VarId GrammarBuilder::hrun(VarId body, std::size_t reps) {
  if (reps == 0) throw Error(ErrorKind::invalid_run, "run with zero repetitions");
  if (reps == 1) return body;
  const Dims a = dims(body);
  return add(HRun{body, reps}, {kHRun, body, reps}, {a.rows, a.cols * reps});
}

VarId GrammarBuilder::vrun(VarId body, std::size_t reps) {
  if (reps == 0) throw Error(ErrorKind::invalid_run, "run with zero repetitions");
  if (reps == 1) return body;
  const Dims a = dims(body);
  return add(VRun{body, reps}, {kVRun, body, reps}, {a.rows * reps, a.cols});
}

VarId GrammarBuilder::power(VarId body, std::size_t reps, bool horizontal) {
  if (reps == 0) throw Error(ErrorKind::invalid_argument, "power with zero repetitions");
  const auto join = [&](VarId a, VarId b) { return horizontal ? hcat(a, b) : vcat(a, b); };
  // Doublings body^(2^t), then the set bits of reps joined from the highest.
  std::vector<VarId> doubled{body};
  for (std::size_t p = 2; p <= reps; p *= 2) doubled.push_back(join(doubled.back(), doubled.back()));
  VarId out = doubled.back();
  for (std::size_t t = doubled.size() - 1; t-- > 0;) {
    if ((reps >> t) & 1U) out = join(out, doubled[t]);
  }
  return out;
}

VarId GrammarBuilder::hpower(VarId body, std::size_t reps) { return power(body, reps, true); }
VarId GrammarBuilder::vpower(VarId body, std::size_t reps) { return power(body, reps, false); }

Slp2D GrammarBuilder::finish(VarId start) const { return Slp2D{rules_, start}; }

Slp2D slp_bordered_identity(std::size_t n) {
  if (n < 2 || !std::has_single_bit(n - 1)) {
    throw Error(ErrorKind::invalid_argument,
                "bordered identity grammar needs n - 1 to be a power of two, got n = " +
                    std::to_string(n));
  }
  GrammarBuilder b;
  const VarId zero = b.terminal(kZero);
  const VarId one = b.terminal(kOne);
  VarId ident = one;
  VarId zeros = zero;
  for (std::size_t k = 1; k < n - 1; k *= 2) {
    ident = b.vcat(b.hcat(ident, zeros), b.hcat(zeros, ident));
    if (2 * k < n - 1) {
      const VarId pair = b.hcat(zeros, zeros);
      zeros = b.vcat(pair, pair);
    }
  }
  const VarId bordered = b.hcat(ident, b.vpower(one, n - 1));
  return b.finish(b.vcat(bordered, b.hpower(zero, n)));
}

Slp2D rlslp_zeros(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::invalid_argument, "zero grid needs m, n >= 1");
  GrammarBuilder b;
  return b.finish(b.vrun(b.hrun(b.terminal(kZero), n), m));
}

namespace {

class QuadtreeBuilder {
 public:
  explicit QuadtreeBuilder(const Grid2D& grid) : grid_(grid) {}

  VarId build(const Rect& r) {
    std::string key = std::to_string(r.height()) + "x" + std::to_string(r.width()) + ":";
    for (std::size_t i = r.i1; i <= r.i2; ++i) {
      const auto row = grid_.row(i).subspan(r.j1 - 1, r.width());
      key.append(row.begin(), row.end());
    }
    if (auto it = blocks_.find(key); it != blocks_.end()) return it->second;
    const VarId v = split(r);
    blocks_.emplace(std::move(key), v);
    return v;
  }

  GrammarBuilder& builder() { return builder_; }

 private:
  VarId split(const Rect& r) {
    if (r.height() == 1 && r.width() == 1) return builder_.terminal(grid_(r.i1, r.j1));
    const std::size_t mid_row = r.i1 + (r.height() + 1) / 2 - 1;
    const std::size_t mid_col = r.j1 + (r.width() + 1) / 2 - 1;
    if (r.height() == 1) {
      return builder_.hcat(build({r.i1, r.j1, r.i2, mid_col}), build({r.i1, mid_col + 1, r.i2, r.j2}));
    }
    if (r.width() == 1) {
      return builder_.vcat(build({r.i1, r.j1, mid_row, r.j2}), build({mid_row + 1, r.j1, r.i2, r.j2}));
    }
    const VarId top = builder_.hcat(build({r.i1, r.j1, mid_row, mid_col}),
                                    build({r.i1, mid_col + 1, mid_row, r.j2}));
    const VarId bottom = builder_.hcat(build({mid_row + 1, r.j1, r.i2, mid_col}),
                                       build({mid_row + 1, mid_col + 1, r.i2, r.j2}));
    return builder_.vcat(top, bottom);
  }

  const Grid2D& grid_;
  GrammarBuilder builder_;
  std::map<std::string, VarId> blocks_;
};

}  // namespace

Slp2D build_quadtree_slp(const Grid2D& grid) {
  QuadtreeBuilder q(grid);
  const VarId start = q.build({1, 1, grid.rows(), grid.cols()});
  return q.builder().finish(start);
}

Slp2D slp_ak(std::size_t k) {
  if (k < 4) throw Error(ErrorKind::invalid_argument, "A_k needs k >= 4");
  const std::size_t width = k * k;
  GrammarBuilder b;
  const VarId zero = b.terminal(kZero);
  const VarId one = b.terminal(kOne);
  const auto zero_row = [&](std::size_t len) { return b.hpower(zero, len); };

  // (1 0^{k-1})^k: the first row of B(i,1) ... B(i,k).
  const VarId first_row = b.hpower(b.hcat(one, zero_row(k - 1)), k);
  // (1 0^k)^{k-1} 1: row i of B(i,1) ... B(i,k).
  const VarId diagonal_row = b.hcat(b.hpower(b.hcat(one, zero_row(k)), k - 1), one);
  const VarId band_zero_row = zero_row(width);
  const auto zero_rows = [&](std::size_t h) { return b.vpower(band_zero_row, h); };

  // Band i: k zero rows, the first block row, i - 2 zero rows, row i of the
  // blocks, k - i zero rows.
  VarId band = 0;
  for (std::size_t i = 2; i <= k; ++i) {
    VarId part = b.vcat(zero_rows(k), first_row);
    if (i > 2) part = b.vcat(part, zero_rows(i - 2));
    part = b.vcat(part, diagonal_row);
    if (i < k) part = b.vcat(part, zero_rows(k - i));
    band = i == 2 ? part : b.vcat(band, part);
  }
  const VarId border = b.vpower(zero_row(k), 2 * k * (k - 1));
  return b.finish(b.hcat(border, b.hcat(band, border)));
}

}  // namespace rep2d

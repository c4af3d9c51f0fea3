#include "rep2d/grammar.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rep2d/error.hpp"

namespace rep2d {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

// Children of a rule in left-to-right (top-to-bottom) order.
std::vector<VarId> children(const Rule& rule) {
  return std::visit(Overloaded{
                        [](const Terminal&) { return std::vector<VarId>{}; },
                        [](const HCat& r) { return std::vector<VarId>{r.left, r.right}; },
                        [](const VCat& r) { return std::vector<VarId>{r.top, r.bottom}; },
                        [](const HRun& r) { return std::vector<VarId>{r.body}; },
                        [](const VRun& r) { return std::vector<VarId>{r.body}; },
                    },
                    rule);
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  std::size_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::invalid_argument, "grammar dimensions overflow");
  }
  return out;
}

std::size_t checked_add(std::size_t a, std::size_t b) {
  std::size_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::invalid_argument, "grammar dimensions overflow");
  }
  return out;
}

std::string var_name(VarId v) { return "variable " + std::to_string(v); }

void check_references(const Slp2D& g) {
  const auto count = g.rules.size();
  if (count == 0) throw Error(ErrorKind::dangling_reference, "grammar has no rules");
  if (g.start >= count) {
    throw Error(ErrorKind::dangling_reference, "start " + var_name(g.start) + " is undefined");
  }
  for (VarId v = 0; v < count; ++v) {
    for (VarId c : children(g.rules[v])) {
      if (c >= count) {
        throw Error(ErrorKind::dangling_reference,
                    var_name(v) + " references undefined " + var_name(c));
      }
    }
    const auto reps = std::visit(Overloaded{
                                     [](const HRun& r) { return r.reps; },
                                     [](const VRun& r) { return r.reps; },
                                     [](const auto&) { return std::size_t{2}; },
                                 },
                                 g.rules[v]);
    if (reps < 2) {
      throw Error(ErrorKind::invalid_run,
                  var_name(v) + " is a run with " + std::to_string(reps) + " repetitions");
    }
  }
}

// Post-order over all variables; throws on a reference cycle.
std::vector<VarId> topological_sort(const Slp2D& g) {
  enum : char { white, grey, black };
  std::vector<char> color(g.rules.size(), white);
  std::vector<VarId> order;
  order.reserve(g.rules.size());
  std::vector<std::pair<VarId, std::size_t>> stack;
  for (VarId root = 0; root < g.rules.size(); ++root) {
    if (color[root] != white) continue;
    stack.push_back({root, 0});
    color[root] = grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto kids = children(g.rules[v]);
      if (next < kids.size()) {
        const VarId c = kids[next++];
        if (color[c] == grey) {
          throw Error(ErrorKind::cycle, var_name(c) + " derives itself");
        }
        if (color[c] == white) {
          color[c] = grey;
          stack.push_back({c, 0});
        }
      } else {
        color[v] = black;
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  return order;
}

}  // namespace

CompiledGrammar::CompiledGrammar(Slp2D grammar) : grammar_(std::move(grammar)) {
  check_references(grammar_);
  order_ = topological_sort(grammar_);
  const auto& rules = grammar_.rules;
  dims_.resize(rules.size());
  heights_.assign(rules.size(), 0);
  for (VarId v : order_) {
    std::visit(Overloaded{
                   [&](const Terminal&) { dims_[v] = {1, 1}; },
                   [&](const HCat& r) {
                     const Dims a = dims_[r.left];
                     const Dims b = dims_[r.right];
                     if (a.rows != b.rows) {
                       throw Error(ErrorKind::dimension_mismatch,
                                   var_name(v) + ": horizontal parts have " +
                                       std::to_string(a.rows) + " and " +
                                       std::to_string(b.rows) + " rows");
                     }
                     dims_[v] = {a.rows, checked_add(a.cols, b.cols)};
                     heights_[v] = 1 + std::max(heights_[r.left], heights_[r.right]);
                   },
                   [&](const VCat& r) {
                     const Dims a = dims_[r.top];
                     const Dims b = dims_[r.bottom];
                     if (a.cols != b.cols) {
                       throw Error(ErrorKind::dimension_mismatch,
                                   var_name(v) + ": vertical parts have " +
                                       std::to_string(a.cols) + " and " +
                                       std::to_string(b.cols) + " columns");
                     }
                     dims_[v] = {checked_add(a.rows, b.rows), a.cols};
                     heights_[v] = 1 + std::max(heights_[r.top], heights_[r.bottom]);
                   },
                   [&](const HRun& r) {
                     const Dims a = dims_[r.body];
                     dims_[v] = {a.rows, checked_mul(a.cols, r.reps)};
                     heights_[v] = 1 + heights_[r.body];
                   },
                   [&](const VRun& r) {
                     const Dims a = dims_[r.body];
                     dims_[v] = {checked_mul(a.rows, r.reps), a.cols};
                     heights_[v] = 1 + heights_[r.body];
                   },
               },
               rules[v]);
  }
  stats_.size = rules.size();
  stats_.height = heights_[grammar_.start];
  stats_.dims = dims_[grammar_.start];
  stats_.has_runs = std::any_of(rules.begin(), rules.end(), [](const Rule& r) {
    return std::holds_alternative<HRun>(r) || std::holds_alternative<VRun>(r);
  });
}

Symbol CompiledGrammar::access(std::size_t i, std::size_t j) const {
  const Dims d = stats_.dims;
  if (i < 1 || j < 1 || i > d.rows || j > d.cols) {
    throw Error(ErrorKind::out_of_bounds, "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") outside " + std::to_string(d.rows) + "x" +
                                              std::to_string(d.cols));
  }
  VarId v = grammar_.start;
  while (true) {
    const Rule& rule = grammar_.rules[v];
    if (const auto* t = std::get_if<Terminal>(&rule)) return t->sym;
    if (const auto* r = std::get_if<HCat>(&rule)) {
      const std::size_t left_cols = dims_[r->left].cols;
      if (j <= left_cols) {
        v = r->left;
      } else {
        j -= left_cols;
        v = r->right;
      }
    } else if (const auto* r = std::get_if<VCat>(&rule)) {
      const std::size_t top_rows = dims_[r->top].rows;
      if (i <= top_rows) {
        v = r->top;
      } else {
        i -= top_rows;
        v = r->bottom;
      }
    } else if (const auto* r = std::get_if<HRun>(&rule)) {
      j = (j - 1) % dims_[r->body].cols + 1;
      v = r->body;
    } else {
      const auto& run = std::get<VRun>(rule);
      i = (i - 1) % dims_[run.body].rows + 1;
      v = run.body;
    }
  }
}

Grid2D CompiledGrammar::expand(VarId v, std::size_t budget) const {
  const Dims d = dims_.at(v);
  std::size_t cells = 0;
  if (__builtin_mul_overflow(d.rows, d.cols, &cells) || cells > budget) {
    throw Error(ErrorKind::budget_exceeded, var_name(v) + " expands to " + std::to_string(d.rows) +
                                                "x" + std::to_string(d.cols) +
                                                ", over the budget of " + std::to_string(budget) +
                                                " cells");
  }
  std::vector<Symbol> out(cells);
  struct Frame {
    VarId var;
    std::size_t row;  // 0-based offset of the top-left cell
    std::size_t col;
  };
  std::vector<Frame> stack{{v, 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    std::visit(Overloaded{
                   [&](const Terminal& r) { out[f.row * d.cols + f.col] = r.sym; },
                   [&](const HCat& r) {
                     stack.push_back({r.right, f.row, f.col + dims_[r.left].cols});
                     stack.push_back({r.left, f.row, f.col});
                   },
                   [&](const VCat& r) {
                     stack.push_back({r.bottom, f.row + dims_[r.top].rows, f.col});
                     stack.push_back({r.top, f.row, f.col});
                   },
                   [&](const HRun& r) {
                     const std::size_t w = dims_[r.body].cols;
                     for (std::size_t x = r.reps; x-- > 0;) stack.push_back({r.body, f.row, f.col + x * w});
                   },
                   [&](const VRun& r) {
                     const std::size_t h = dims_[r.body].rows;
                     for (std::size_t x = r.reps; x-- > 0;) stack.push_back({r.body, f.row + x * h, f.col});
                   },
               },
               grammar_.rules[f.var]);
  }
  return Grid2D(d.rows, d.cols, std::move(out));
}

std::size_t CompiledGrammar::grammar_tree_nodes() const {
  std::vector<char> seen(grammar_.rules.size(), 0);
  std::size_t nodes = 1;
  std::vector<VarId> stack{grammar_.start};
  seen[grammar_.start] = 1;
  while (!stack.empty()) {
    const VarId v = stack.back();
    stack.pop_back();
    const Rule& rule = grammar_.rules[v];
    if (std::holds_alternative<HRun>(rule) || std::holds_alternative<VRun>(rule)) {
      nodes += 2;
    } else {
      nodes += children(rule).size();
    }
    for (VarId c : children(rule)) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  return nodes;
}

GrammarStats validate(const Slp2D& grammar) { return CompiledGrammar(grammar).stats(); }

bool meets_size_lower_bound(const GrammarStats& stats) {
  const double bound = std::log2(static_cast<double>(stats.dims.rows)) +
                       std::log2(static_cast<double>(stats.dims.cols));
  return static_cast<double>(stats.size) >= bound;
}

}  // namespace rep2d

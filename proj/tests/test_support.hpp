#pragma once

#include <doctest.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rep2d/error.hpp"
#include "rep2d/generators.hpp"
#include "rep2d/grammar.hpp"
#include "rep2d/grammar_builders.hpp"

namespace rep2d::testing {

inline constexpr std::uint64_t kSeed = 20240601;

/// Kind of the Error thrown by f; fails the test when nothing is thrown.
inline ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_argument;
}

/// Seeded random grammar mixing concatenations and runs. Expansions stay
/// within max_side x max_side and heights within max_height.
inline Slp2D random_grammar(std::uint64_t seed, std::size_t max_side = 64,
                            std::size_t max_height = 12, std::size_t steps = 40) {
  std::mt19937_64 rng(seed);
  const auto pick = [&](std::size_t bound) {
    return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng));
  };
  GrammarBuilder b;
  std::vector<VarId> vars;
  std::vector<std::size_t> heights;
  const Symbol alphabet[] = {'0', '1', '#'};
  for (std::size_t s = 0; s < 1 + pick(3); ++s) {
    vars.push_back(b.terminal(alphabet[s]));
    heights.push_back(0);
  }
  VarId last = vars.back();
  for (std::size_t step = 0; step < steps; ++step) {
    const VarId a = vars[pick(vars.size())];
    const VarId c = vars[pick(vars.size())];
    const Dims da = b.dims(a);
    const Dims dc = b.dims(c);
    const std::size_t ha = heights[a];
    const std::size_t h = 1 + std::max(ha, heights[c]);
    VarId made = 0;
    std::size_t made_height = 0;
    switch (pick(4)) {
      case 0:
        if (da.rows != dc.rows || da.cols + dc.cols > max_side || h > max_height) continue;
        made = b.hcat(a, c);
        made_height = h;
        break;
      case 1:
        if (da.cols != dc.cols || da.rows + dc.rows > max_side || h > max_height) continue;
        made = b.vcat(a, c);
        made_height = h;
        break;
      case 2: {
        const std::size_t reps = 2 + pick(3);
        if (da.cols * reps > max_side || ha + 1 > max_height) continue;
        made = b.hrun(a, reps);
        made_height = ha + 1;
        break;
      }
      default: {
        const std::size_t reps = 2 + pick(3);
        if (da.rows * reps > max_side || ha + 1 > max_height) continue;
        made = b.vrun(a, reps);
        made_height = ha + 1;
        break;
      }
    }
    if (made == vars.size()) {
      vars.push_back(made);
      heights.push_back(made_height);
    }
    last = made;
  }
  return b.finish(last);
}

}  // namespace rep2d::testing

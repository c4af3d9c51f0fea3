#pragma once

#include <string>
#include <string_view>

#include "rep2d/attractor.hpp"
#include "rep2d/grammar.hpp"
#include "rep2d/macro_scheme.hpp"

namespace rep2d {

/// Grammar files: {"start": id, "rules": [{"id", "kind", ...}]} where kind is
/// one of "term" (sym), "hcat" (left, right), "vcat" (top, bottom), "hrun"
/// or "vrun" (body, reps). Ids are arbitrary distinct non-negative integers
/// on input and the rule indices on output. Symbols are one-character
/// strings.
std::string grammar_to_json(const Slp2D& grammar);
/// Throws Error(parse_error) on malformed documents and
/// Error(dangling_reference) on undefined ids. Does not validate.
Slp2D grammar_from_json(std::string_view text);

/// Scheme files: {"m", "n", "phrases": [{"type": "explicit", "i", "j",
/// "sym"} | {"type": "copy", "i1", "j1", "i2", "j2", "si", "sj"}]}.
/// Phrases are written row-major by top-left corner.
std::string scheme_to_json(const MacroScheme2D& scheme);
MacroScheme2D scheme_from_json(std::string_view text);

/// Attractor files: one "i j" pair per line; blank lines are ignored.
std::string attractor_to_text(const AttractorSet& gamma);
AttractorSet attractor_from_text(std::string_view text);

}  // namespace rep2d

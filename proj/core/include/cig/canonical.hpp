#pragma once

#include <span>
#include <string>

#include "cig/forest.hpp"

namespace cig {

// Fast non-collapsing key: the raw alive mask. Equal keys iff equal alive sets.
std::string raw_key(const GameState& state);

// Canonical code of the residual forest: AHU encoding per component rooted at
// its center (minimum of the two rooted codes for bicentral components),
// sorted multiset of component codes. Equal keys iff the residual forests are
// isomorphic.
std::string canonical_key(const GameState& state);

// Colored variant: keys are equal iff there is an isomorphism preserving the
// per-vertex colors. Used by restricted solves whose fixed strategy
// distinguishes vertex roles.
std::string canonical_key(const GameState& state, std::span<const std::uint8_t> colors);

}  // namespace cig

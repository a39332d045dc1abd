#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "cig/forest.hpp"

namespace cig {

// Path 0-1-...-(n-1). n = 0 gives the empty forest.
Forest path(int n);

// Spider S_k: central vertex 0 plus k legs of three vertices; leg i is
// attach 3i+1 -- middle 3i+2 -- tip 3i+3, with the attach adjacent to the
// center. Order 3k+1.
Forest spider_sk(int k);

struct TkLeg {
  int attach = 0;
  int middle = 0;
  int tip = 0;
  int copy = 0;  // 1 or 2
};

struct TkLayout {
  int k = 0;
  std::array<int, 2> centers{};  // centers of copy 1 and copy 2
  std::vector<TkLeg> legs;       // 2k legs, copy 1 first

  int copy_of(int v) const;  // 1 or 2
};

// T_k: two S_k copies joined by an edge between their centers, order 2(3k+1).
std::pair<Forest, TkLayout> tree_tk(int k);

// Uniform labeled tree via Pruefer decoding of a splitmix64-driven sequence.
Forest random_tree(int n, std::uint64_t seed);

// Forest with exactly c components, deterministic in seed.
Forest random_forest(int n, int c, std::uint64_t seed);

// One representative per isomorphism class of trees on n vertices
// (level-sequence generation of rooted trees, deduplicated by canonical key).
// Throws CapExceeded above n = 16.
std::vector<Forest> enumerate_trees(int n);

// One representative per isomorphism class of forests on n vertices, built as
// component multisets of enumerated trees.
std::vector<Forest> enumerate_forests(int n);

}  // namespace cig

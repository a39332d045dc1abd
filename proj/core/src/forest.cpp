#include "cig/forest.hpp"

#include <set>
#include <string>
#include <vector>

#include "cig/errors.hpp"

namespace cig {

Forest build_forest(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0 || n > kMaxVertices) {
    fail(Errc::CapacityExceeded, "order " + std::to_string(n) + " outside [0, " +
                                     std::to_string(kMaxVertices) + "]");
  }
  Forest f;
  f.order = n;
  f.adjacency.resize(n);
  f.open_mask.resize(n);
  f.closed_mask.resize(n);

  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      fail(Errc::InvalidVertexId,
           "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
    if (a == b) fail(Errc::CycleDetected, "loop at vertex " + std::to_string(a));
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      fail(Errc::DuplicateEdge,
           "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    f.adjacency[a].push_back(b);
    f.adjacency[b].push_back(a);
    f.open_mask[a].set(b);
    f.open_mask[b].set(a);
  }
  f.edges = std::move(edges);

  for (int v = 0; v < n; ++v) {
    f.closed_mask[v] = f.open_mask[v];
    f.closed_mask[v].set(v);
  }

  // Union-find doubles as the cycle check: an edge inside an existing
  // component closes a cycle.
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [a, b] : f.edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      fail(Errc::CycleDetected,
           "edge (" + std::to_string(a) + "," + std::to_string(b) + ") closes a cycle");
    }
    parent[ra] = rb;
  }
  int c = 0;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) ++c;
  }
  f.component_count = c;
  return f;
}

int isolated_count(const GameState& state) {
  int c = 0;
  state.alive.for_each([&](int v) {
    if (!state.base->open_mask[v].intersects(state.alive)) ++c;
  });
  return c;
}

MoveDelta move_delta(const GameState& state, int u) {
  if (!state.alive.test(u)) fail(Errc::DeadVertex, "vertex " + std::to_string(u) + " not alive");
  const Forest& f = *state.base;
  VertexSet removed = state.alive & f.closed_mask[u];
  MoveDelta d;
  d.v = removed.count();

  // Removed edges: edges inside `removed` are exactly the v-1 edges u--nbr
  // (u's alive neighbours are pairwise non-adjacent in a forest), boundary
  // edges are counted once in the degree sum.
  int deg_sum = 0;
  removed.for_each([&](int x) { deg_sum += (f.open_mask[x] & state.alive).count(); });
  d.e = deg_sum - (d.v - 1);

  VertexSet after = state.alive.minus(removed);
  int iso_before = isolated_count(state);
  int iso_after = 0;
  after.for_each([&](int x) {
    if (!f.open_mask[x].intersects(after)) ++iso_after;
  });
  d.k = iso_after - iso_before;
  d.m8 = 8 * d.v - 3 * d.e - 5 * d.k;
  return d;
}

std::pair<GameState, MoveDelta> apply_move(const GameState& state, int u) {
  MoveDelta d = move_delta(state, u);
  GameState next{state.base, state.alive.minus(state.alive & state.base->closed_mask[u])};
  return {next, d};
}

int residual_edge_count(const GameState& state) {
  int e = 0;
  for (auto& [a, b] : state.base->edges) {
    if (state.alive.test(a) && state.alive.test(b)) ++e;
  }
  return e;
}

int residual_component_count(const GameState& state) {
  int n = state.base->order;
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [a, b] : state.base->edges) {
    if (state.alive.test(a) && state.alive.test(b)) parent[find(a)] = find(b);
  }
  int c = 0;
  state.alive.for_each([&](int v) {
    if (find(v) == v) ++c;
  });
  return c;
}

bool residual_is_acyclic(const GameState& state) {
  return residual_edge_count(state) == state.alive_count() - residual_component_count(state);
}

}  // namespace cig

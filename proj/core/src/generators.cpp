#include "cig/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "cig/canonical.hpp"
#include "cig/errors.hpp"
#include "cig/rng.hpp"

namespace cig {

Forest path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_forest(n, std::move(edges));
}

Forest spider_sk(int k) {
  if (k < 1) fail(Errc::InvalidVertexId, "spider_sk requires k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    int attach = 3 * i + 1;
    edges.emplace_back(0, attach);
    edges.emplace_back(attach, attach + 1);
    edges.emplace_back(attach + 1, attach + 2);
  }
  return build_forest(3 * k + 1, std::move(edges));
}

int TkLayout::copy_of(int v) const { return v < centers[1] ? 1 : 2; }

std::pair<Forest, TkLayout> tree_tk(int k) {
  if (k < 1) fail(Errc::InvalidVertexId, "tree_tk requires k >= 1");
  int half = 3 * k + 1;
  TkLayout layout;
  layout.k = k;
  layout.centers = {0, half};

  std::vector<std::pair<int, int>> edges;
  for (int copy = 0; copy < 2; ++copy) {
    int base = copy * half;
    for (int i = 0; i < k; ++i) {
      int attach = base + 3 * i + 1;
      edges.emplace_back(base, attach);
      edges.emplace_back(attach, attach + 1);
      edges.emplace_back(attach + 1, attach + 2);
      layout.legs.push_back({attach, attach + 1, attach + 2, copy + 1});
    }
  }
  edges.emplace_back(layout.centers[0], layout.centers[1]);
  return {build_forest(2 * half, std::move(edges)), layout};
}

namespace {

// Standard Pruefer decoding; sequence values are vertex ids.
std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int v : seq) ++degree[v];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int v : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return edges;
}

}  // namespace

Forest random_tree(int n, std::uint64_t seed) {
  if (n < 1) fail(Errc::InvalidVertexId, "random_tree requires n >= 1");
  if (n == 1) return build_forest(1, {});
  if (n == 2) return build_forest(2, {{0, 1}});
  SplitMix64 rng(seed);
  std::vector<int> seq(n - 2);
  for (int& v : seq) v = static_cast<int>(rng.below(n));
  return build_forest(n, pruefer_decode(seq, n));
}

Forest random_forest(int n, int c, std::uint64_t seed) {
  if (n < 1) fail(Errc::InvalidVertexId, "random_forest requires n >= 1");
  if (c < 1 || c > n) {
    fail(Errc::InvalidComponentCount,
         "component count " + std::to_string(c) + " outside [1, " + std::to_string(n) + "]");
  }
  SplitMix64 rng(seed);
  std::vector<int> sizes(c, 1);
  for (int extra = n - c; extra > 0; --extra) ++sizes[rng.below(c)];

  std::vector<std::pair<int, int>> edges;
  int offset = 0;
  for (int i = 0; i < c; ++i) {
    Forest part = random_tree(sizes[i], mix64(seed, static_cast<std::uint64_t>(i) + 1));
    for (auto [a, b] : part.edges) edges.emplace_back(a + offset, b + offset);
    offset += sizes[i];
  }
  return build_forest(n, std::move(edges));
}

namespace {

std::vector<std::pair<int, int>> level_sequence_edges(const std::vector<int>& levels) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> last_at_level(levels.size() + 2, -1);
  for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
    int lv = levels[i];
    if (lv > 1) edges.emplace_back(last_at_level[lv - 1], i);
    last_at_level[lv] = i;
  }
  return edges;
}

}  // namespace

std::vector<Forest> enumerate_trees(int n) {
  if (n < 1 || n > 16) fail(Errc::CapExceeded, "enumerate_trees supports 1 <= n <= 16");
  if (n == 1) {
    std::vector<Forest> out;
    out.push_back(build_forest(1, {}));
    return out;
  }

  // Beyer-Hedetniemi level sequences enumerate rooted trees; the free trees
  // fall out by canonical-key deduplication.
  std::vector<Forest> out;
  std::set<std::string> seen;
  std::vector<int> levels(n);
  std::iota(levels.begin(), levels.end(), 1);
  for (;;) {
    Forest t = build_forest(n, level_sequence_edges(levels));
    GameState full = GameState::initial(t);
    if (seen.insert(canonical_key(full)).second) out.push_back(std::move(t));

    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (levels[i] > 2) {
        p = i;
        break;
      }
    }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
      if (levels[i] == levels[p] - 1) {
        q = i;
        break;
      }
    }
    for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  }
  return out;
}

namespace {

void forest_multisets(int remaining, int max_size, int min_index_at_max,
                      const std::vector<std::vector<Forest>>& trees_by_order,
                      std::vector<const Forest*>& parts, std::vector<Forest>& out) {
  if (remaining == 0) {
    std::vector<std::pair<int, int>> edges;
    int total = 0;
    for (const Forest* part : parts) {
      for (auto [a, b] : part->edges) edges.emplace_back(a + total, b + total);
      total += part->order;
    }
    out.push_back(build_forest(total, std::move(edges)));
    return;
  }
  for (int size = std::min(remaining, max_size); size >= 1; --size) {
    const auto& trees = trees_by_order[size];
    int start = size == max_size ? min_index_at_max : 0;
    for (int i = start; i < static_cast<int>(trees.size()); ++i) {
      parts.push_back(&trees[i]);
      forest_multisets(remaining - size, size, i, trees_by_order, parts, out);
      parts.pop_back();
    }
  }
}

}  // namespace

std::vector<Forest> enumerate_forests(int n) {
  if (n < 1 || n > 16) fail(Errc::CapExceeded, "enumerate_forests supports 1 <= n <= 16");
  std::vector<std::vector<Forest>> trees_by_order(n + 1);
  for (int size = 1; size <= n; ++size) trees_by_order[size] = enumerate_trees(size);
  std::vector<Forest> out;
  std::vector<const Forest*> parts;
  forest_multisets(n, n, 0, trees_by_order, parts, out);
  return out;
}

}  // namespace cig

#include "cig/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

namespace cig {

std::string raw_key(const GameState& state) {
  std::string key(sizeof(state.alive.words), '\0');
  std::memcpy(key.data(), state.alive.words.data(), key.size());
  return key;
}

namespace {

char color_char(std::span<const std::uint8_t> colors, int v) {
  return colors.empty() ? 'a' : static_cast<char>('a' + colors[v]);
}

// Rooted AHU code: '(' color sorted-child-codes ')'.
std::string rooted_code(const GameState& state, std::span<const std::uint8_t> colors, int v,
                        int parent) {
  std::vector<std::string> kids;
  for (int w : state.base->adjacency[v]) {
    if (w != parent && state.alive.test(w)) kids.push_back(rooted_code(state, colors, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string code;
  code.reserve(3 + 8 * kids.size());
  code.push_back('(');
  code.push_back(color_char(colors, v));
  for (auto& k : kids) code += k;
  code.push_back(')');
  return code;
}

std::string key_impl(const GameState& state, std::span<const std::uint8_t> colors) {
  const Forest& f = *state.base;
  std::vector<char> visited(f.order, 0);
  std::vector<std::string> component_codes;

  std::vector<int> comp, stack, degree(f.order, 0);
  state.alive.for_each([&](int start) {
    if (visited[start]) return;
    comp.clear();
    stack.assign(1, start);
    visited[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : f.adjacency[v]) {
        if (state.alive.test(w) && !visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }

    // Leaf pruning to locate the center (one or two vertices).
    for (int v : comp) degree[v] = (f.open_mask[v] & state.alive).count();
    std::vector<int> layer;
    std::vector<char> removed(f.order, 0);
    int left = static_cast<int>(comp.size());
    for (int v : comp) {
      if (degree[v] <= 1) layer.push_back(v);
    }
    while (left > 2) {
      std::vector<int> next;
      for (int v : layer) {
        removed[v] = 1;
        --left;
        for (int w : f.adjacency[v]) {
          if (state.alive.test(w) && !removed[w] && --degree[w] == 1) next.push_back(w);
        }
      }
      layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v : comp) {
      if (!removed[v]) centers.push_back(v);
    }

    std::string best;
    for (int c : centers) {
      std::string code = rooted_code(state, colors, c, -1);
      if (best.empty() || code < best) best = std::move(code);
    }
    component_codes.push_back(std::move(best));
  });

  std::sort(component_codes.begin(), component_codes.end());
  std::string key;
  for (auto& c : component_codes) key += c;
  return key;
}

}  // namespace

std::string canonical_key(const GameState& state) { return key_impl(state, {}); }

std::string canonical_key(const GameState& state, std::span<const std::uint8_t> colors) {
  return key_impl(state, colors);
}

}  // namespace cig

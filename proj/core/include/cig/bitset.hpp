#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace cig {

// Hard capacity of the exact machinery; T_k instances up to k = 42 fit.
inline constexpr int kMaxVertices = 256;

// Fixed-width set of vertex ids in [0, kMaxVertices).
struct VertexSet {
  std::array<std::uint64_t, 4> words{};

  static VertexSet full(int n) {
    VertexSet s;
    for (int w = 0; n > 0; ++w, n -= 64) {
      s.words[w] = n >= 64 ? ~0ull : ((1ull << n) - 1);
    }
    return s;
  }

  void set(int v) { words[v >> 6] |= 1ull << (v & 63); }
  void reset(int v) { words[v >> 6] &= ~(1ull << (v & 63)); }
  bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }

  bool empty() const { return (words[0] | words[1] | words[2] | words[3]) == 0; }
  bool any() const { return !empty(); }

  int lowest() const {
    for (int w = 0; w < 4; ++w) {
      if (words[w]) return w * 64 + std::countr_zero(words[w]);
    }
    return -1;
  }

  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    for (int i = 0; i < 4; ++i) r.words[i] = a.words[i] & b.words[i];
    return r;
  }
  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    for (int i = 0; i < 4; ++i) r.words[i] = a.words[i] | b.words[i];
    return r;
  }
  // a \ b
  VertexSet minus(const VertexSet& b) const {
    VertexSet r;
    for (int i = 0; i < 4; ++i) r.words[i] = words[i] & ~b.words[i];
    return r;
  }
  bool intersects(const VertexSet& b) const {
    for (int i = 0; i < 4; ++i) {
      if (words[i] & b.words[i]) return true;
    }
    return false;
  }

  bool operator==(const VertexSet&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < 4; ++w) {
      std::uint64_t bits = words[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        f(v);
      }
    }
  }
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : s.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace cig

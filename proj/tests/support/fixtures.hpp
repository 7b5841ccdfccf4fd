#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "branchpack/branching.hpp"
#include "branchpack/digraph.hpp"

namespace fixtures {

using namespace branchpack;

/// r->a (e1), r->b (e2), a->b (e3), b->a (e4).
inline Digraph triangle() {
  DigraphBuilder b;
  b.add_vertex("r");
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_edge("e1", "r", "a");
  b.add_edge("e2", "r", "b");
  b.add_edge("e3", "a", "b");
  b.add_edge("e4", "b", "a");
  return std::move(b).build();
}

inline VertexSet vs(const Digraph& g, std::initializer_list<const char*> names) {
  std::vector<VertexId> ids;
  for (const auto* n : names) ids.push_back(g.vertex(n));
  return VertexSet(std::move(ids));
}

inline std::vector<VertexSet> repeat_roots(const Digraph& g, const char* name, std::size_t k) {
  return std::vector<VertexSet>(k, vs(g, {name}));
}

/// Graph on vertices "0".."n-1" with the given (tail, head) pairs named e0, e1, ...
inline Digraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                          const std::vector<std::pair<int, int>>& bundles = {}) {
  DigraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    b.add_edge("e" + std::to_string(i), VertexId{static_cast<std::uint32_t>(pairs[i].first)},
               VertexId{static_cast<std::uint32_t>(pairs[i].second)});
  }
  for (const auto& [t, h] : bundles) {
    b.add_bundle(VertexId{static_cast<std::uint32_t>(t)}, VertexId{static_cast<std::uint32_t>(h)});
  }
  return std::move(b).build();
}

inline VertexSet from_mask(const Digraph& g, std::uint32_t m) {
  std::vector<VertexId> out;
  std::uint32_t i = 0;
  for (auto v : g.vertices()) {
    if (m >> i & 1u) out.push_back(v);
    ++i;
  }
  return VertexSet(std::move(out));
}

/// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

  /// Random multigraph: n vertices, m edges with independent uniform
  /// endpoints (loops allowed when `loops`), optional bundles.
  Digraph graph(int n, int m, bool loops = false, int bundles = 0) {
    std::vector<std::pair<int, int>> pairs;
    if (n < 2 && !loops) m = 0;
    while (static_cast<int>(pairs.size()) < m) {
      const int t = static_cast<int>(below(n));
      const int h = static_cast<int>(below(n));
      if (t == h && !loops) continue;
      pairs.emplace_back(t, h);
    }
    std::vector<std::pair<int, int>> bs;
    for (int i = 0; i < bundles && n > 1; ++i) {
      const int t = static_cast<int>(below(n));
      const int h = static_cast<int>(below(n));
      bool dup = t == h;
      for (const auto& x : bs) dup = dup || x == std::make_pair(t, h);
      if (!dup) bs.emplace_back(t, h);
    }
    return from_pairs(n, pairs, bs);
  }

  std::vector<VertexSet> roots(const Digraph& g, std::size_t k) {
    const auto n = g.vertex_count();
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t m = 0;
      while (m == 0) m = static_cast<std::uint32_t>(below(std::uint64_t{1} << n));
      out.push_back(from_mask(g, m));
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fixtures

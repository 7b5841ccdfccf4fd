#include "oracle.hpp"

#include <set>

namespace oracle {

using namespace branchpack;

namespace {

std::vector<int> positions(const Digraph& g) {
  std::vector<int> pos(g.vertex_universe(), -1);
  int i = 0;
  for (auto v : g.vertices()) pos[v.index] = i++;
  return pos;
}

class Search {
 public:
  Search(const RawGraph& g, const std::vector<std::uint32_t>& roots)
      : n_(g.n), k_(static_cast<int>(roots.size())), roots_(roots) {
    edges_ = g.edges;
    for (const auto& b : g.bundles) {
      for (int c = 0; c < k_; ++c) edges_.push_back(b);
    }
    in_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      if (edges_[e].first != edges_[e].second) in_[edges_[e].second].push_back(e);
    }
    used_.assign(edges_.size(), 0);
    parents_.assign(k_, std::vector<int>(n_, -1));
    full_ = n_ == 32 ? ~0u : (1u << n_) - 1;
  }

  bool run() { return level(0); }

 private:
  bool reaches_all(std::uint32_t from) const {
    std::uint32_t seen = from;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (used_[e]) continue;
        const auto [t, h] = edges_[e];
        if ((seen >> t & 1u) && !(seen >> h & 1u)) {
          seen |= 1u << h;
          grew = true;
        }
      }
    }
    return seen == full_;
  }

  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> words((used_.size() + 63) / 64, 0);
    for (std::size_t e = 0; e < used_.size(); ++e) {
      if (used_[e]) words[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    return words;
  }

  bool level(int i) {
    if (i == k_) return true;
    for (int j = i; j < k_; ++j) {
      if (!reaches_all(roots_[j])) return false;
    }
    // Reachability is exactly what the last branching needs.
    if (i == k_ - 1) return true;
    auto state = std::make_pair(i, key());
    if (failed_.contains(state)) return false;
    std::vector<int> order;
    for (int v = 0; v < n_; ++v) {
      if (!(roots_[i] >> v & 1u)) order.push_back(v);
    }
    std::fill(parents_[i].begin(), parents_[i].end(), -1);
    const bool ok = assign(i, order, 0);
    if (!ok) failed_.insert(std::move(state));
    return ok;
  }

  bool assign(int i, const std::vector<int>& order, std::size_t idx) {
    if (idx == order.size()) return level(i + 1);
    const int v = order[idx];
    auto& parent = parents_[i];
    std::uint32_t tried = 0;
    for (int e : in_[v]) {
      if (used_[e]) continue;
      const int t = edges_[e].first;
      // Parallel edges are interchangeable here; try one per tail.
      if (tried >> t & 1u) continue;
      tried |= 1u << t;
      int x = t;
      while (x != v && parent[x] != -1) x = edges_[parent[x]].first;
      if (x == v) continue;
      used_[e] = 1;
      parent[v] = e;
      if (assign(i, order, idx + 1)) return true;
      used_[e] = 0;
      parent[v] = -1;
    }
    return false;
  }

  int n_;
  int k_;
  std::vector<std::uint32_t> roots_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> in_;
  std::vector<char> used_;
  std::vector<std::vector<int>> parents_;
  std::uint32_t full_ = 0;
  std::set<std::pair<int, std::vector<std::uint64_t>>> failed_;
};

}  // namespace

RawGraph raw_from(const Digraph& g) {
  const auto pos = positions(g);
  RawGraph r;
  r.n = static_cast<int>(g.vertex_count());
  for (const auto& e : g.edges()) r.edges.emplace_back(pos[e.tail.index], pos[e.head.index]);
  for (const auto& b : g.bundles()) r.bundles.emplace_back(pos[b.tail.index], pos[b.head.index]);
  return r;
}

std::uint32_t mask_of(const Digraph& g, const VertexSet& x) {
  const auto pos = positions(g);
  std::uint32_t m = 0;
  for (auto v : x) m |= 1u << pos[v.index];
  return m;
}

std::vector<std::uint32_t> masks_from(const Digraph& g, const std::vector<VertexSet>& sets) {
  std::vector<std::uint32_t> out;
  for (const auto& s : sets) out.push_back(mask_of(g, s));
  return out;
}

std::optional<std::uint64_t> raw_rho(const Digraph& g, const std::vector<EdgeId>& used, const VertexSet& x) {
  std::set<std::uint32_t> gone;
  for (auto e : used) gone.insert(e.index);
  for (const auto& b : g.bundles()) {
    if (!x.contains(b.tail) && x.contains(b.head)) return std::nullopt;
  }
  std::uint64_t count = 0;
  for (const auto& e : g.edges()) {
    if (gone.contains(e.id.index) || e.tail == e.head) continue;
    if (!x.contains(e.tail) && x.contains(e.head)) ++count;
  }
  return count;
}

std::uint32_t raw_s(const Digraph&, const std::vector<VertexSet>& vertex_sets, const VertexSet& x) {
  std::uint32_t s = 0;
  for (const auto& vs : vertex_sets) {
    bool meets = false;
    for (auto v : vs) meets = meets || x.contains(v);
    if (!meets) ++s;
  }
  return s;
}

bool raw_violated(const Digraph& g, const KBranching& kb, const VertexSet& x) {
  if (x.empty()) return false;
  std::vector<EdgeId> used;
  std::vector<VertexSet> sets;
  for (const auto& b : kb.branchings) {
    used.insert(used.end(), b.edges.begin(), b.edges.end());
    sets.push_back(b.vertices);
  }
  const auto rho = raw_rho(g, used, x);
  return rho && *rho < raw_s(g, sets, x);
}

bool packable(const RawGraph& g, const std::vector<std::uint32_t>& roots) {
  for (auto r : roots) {
    if (r == 0) return false;
  }
  Search search(g, roots);
  return search.run();
}

bool any_violation(const Digraph& g, const KBranching& kb) {
  const auto verts = g.vertices().ids();
  const std::size_t n = verts.size();
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    std::vector<VertexId> members;
    for (std::size_t b = 0; b < n; ++b) {
      if (m >> b & 1u) members.push_back(verts[b]);
    }
    if (raw_violated(g, kb, VertexSet(std::move(members)))) return true;
  }
  return false;
}

}  // namespace oracle

#include "branchpack/cuts.hpp"

#include <algorithm>
#include <stdexcept>

#include "branchpack/errors.hpp"

namespace branchpack {

namespace {

std::vector<char> used_mask(const Digraph& host, const KBranching& kb) {
  std::vector<char> used(host.edge_universe(), 0);
  for (const auto& b : kb.branchings) {
    for (auto e : b.edges) {
      if (e.index < used.size()) used[e.index] = 1;
    }
  }
  return used;
}

Card residual_rho(const Digraph& host, const std::vector<char>& used, const VertexSet& x) {
  const auto in = host.mask(x);
  for (const auto& b : host.bundles()) {
    if (!in[b.tail.index] && in[b.head.index]) return Card::aleph0();
  }
  std::uint64_t count = 0;
  for (auto v : x) {
    for (auto e : host.in_edges(v)) {
      if (!used[e.index] && !in[host.edge(e).tail.index]) ++count;
    }
  }
  return Card(count);
}

std::uint32_t count_missing(const KBranching& kb, const VertexSet& x) {
  std::uint32_t s = 0;
  for (const auto& b : kb.branchings) {
    if (!intersects(b.vertices, x)) ++s;
  }
  return s;
}

}  // namespace

std::uint32_t s_value(const Digraph& host, const KBranching& kb, const VertexSet& x) {
  host.require_vertices(x);
  return count_missing(kb, x);
}

Deficiency p_value(const Digraph& host, const KBranching& kb, const VertexSet& x) {
  host.require_vertices(x);
  return Deficiency{residual_rho(host, used_mask(host, kb), x), count_missing(kb, x)};
}

bool certificate_holds(const Digraph& host, const KBranching& kb, const CutCertificate& cert) {
  if (cert.vertices.empty()) return false;
  const auto p = p_value(host, kb, cert.vertices);
  return p.deficit() && p.rho == cert.rho && p.s == cert.s;
}

std::optional<CutCertificate> check_condition_bruteforce(const Digraph& host, const KBranching& kb,
                                                         std::size_t bound) {
  const auto& verts = host.vertices().ids();
  const std::size_t n = verts.size();
  if (n > bound || n > 31) {
    throw InputError("brute-force check refused: " + std::to_string(n) + " vertices exceed the bound of " +
                     std::to_string(std::min<std::size_t>(bound, 31)));
  }
  std::vector<int> pos(host.vertex_universe(), -1);
  for (std::size_t i = 0; i < n; ++i) pos[verts[i].index] = static_cast<int>(i);

  const auto used = used_mask(host, kb);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  // (tail bit, head bit)
  for (const auto& e : host.edges()) {
    if (used[e.id.index] || e.is_loop()) continue;
    arcs.emplace_back(1u << pos[e.tail.index], 1u << pos[e.head.index]);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bundles;
  for (const auto& b : host.bundles()) {
    if (b.tail != b.head) bundles.emplace_back(1u << pos[b.tail.index], 1u << pos[b.head.index]);
  }
  std::vector<std::uint32_t> branch_masks;
  for (const auto& b : kb.branchings) {
    std::uint32_t m = 0;
    for (auto v : b.vertices) {
      if (v.index < pos.size() && pos[v.index] >= 0) m |= 1u << pos[v.index];
    }
    branch_masks.push_back(m);
  }

  auto evaluate = [&](std::uint32_t x) -> std::pair<Card, std::uint32_t> {
    std::uint32_t s = 0;
    for (auto m : branch_masks) s += (m & x) == 0 ? 1 : 0;
    for (const auto& [t, h] : bundles) {
      if (!(x & t) && (x & h)) return {Card::aleph0(), s};
    }
    std::uint64_t r = 0;
    for (const auto& [t, h] : arcs) r += (!(x & t) && (x & h)) ? 1 : 0;
    return {Card(r), s};
  };

  // Depth-first extension by ascending position visits subsets in
  // lexicographic order of their sorted vertex sequences.
  std::optional<CutCertificate> found;
  auto dfs = [&](auto&& self, std::uint32_t x, std::size_t next) -> bool {
    for (std::size_t i = next; i < n; ++i) {
      const std::uint32_t y = x | (1u << i);
      const auto [r, s] = evaluate(y);
      if (r < Card(s)) {
        std::vector<VertexId> members;
        for (std::size_t b = 0; b < n; ++b) {
          if (y & (1u << b)) members.push_back(verts[b]);
        }
        found = CutCertificate{VertexSet(std::move(members)), r, s};
        return true;
      }
      if (self(self, y, i + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0, 0);
  return found;
}

// ---------------------------------------------------------------------------
// Auxiliary network

std::uint32_t AuxiliaryNetwork::node(VertexId v) const {
  if (v.index >= node_of_vertex.size() || node_of_vertex[v.index] < 0) {
    throw InputError("vertex is not part of the auxiliary network");
  }
  return static_cast<std::uint32_t>(node_of_vertex[v.index]);
}

VertexSet AuxiliaryNetwork::vertices_of(std::span<const std::uint32_t> nodes) const {
  std::vector<VertexId> out;
  for (auto n : nodes) {
    if (is_vertex_node(n)) out.push_back(vertex_of_node[n]);
  }
  return VertexSet(std::move(out));
}

AuxiliaryNetwork build_auxiliary(const Digraph& host, const KBranching& kb, VertexId sink) {
  if (!host.has_vertex(sink)) throw InputError("auxiliary sink is not a vertex of the graph");
  for (const auto& b : kb.branchings) host.require_vertices(b.vertices);

  const auto k = static_cast<std::int64_t>(kb.size());
  AuxiliaryNetwork aux;
  const auto& verts = host.vertices().ids();
  aux.first_vertex_node = static_cast<std::uint32_t>(1 + kb.size());
  aux.network = FlowNetwork(aux.first_vertex_node + verts.size());
  aux.vertex_of_node.assign(aux.first_vertex_node + verts.size(), VertexId{});
  aux.node_of_vertex.assign(host.vertex_universe(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    aux.vertex_of_node[aux.first_vertex_node + i] = verts[i];
    aux.node_of_vertex[verts[i].index] = static_cast<std::int64_t>(aux.first_vertex_node + i);
  }

  using Kind = AuxiliaryNetwork::ArcKind;
  auto add = [&](std::uint32_t t, std::uint32_t h, std::int64_t cap, AuxiliaryNetwork::ArcOrigin origin) {
    aux.network.add_arc(t, h, cap);
    aux.origins.push_back(std::move(origin));
  };
  for (std::size_t i = 0; i < kb.size(); ++i) {
    add(aux.source(), aux.branch_node(i), 1, {Kind::kSourceToBranch, i, {}, 0});
  }
  for (std::size_t i = 0; i < kb.size(); ++i) {
    for (auto u : kb[i].vertices) add(aux.branch_node(i), aux.node(u), k, {Kind::kBranchToVertex, i, {}, 0});
  }

  const auto used = used_mask(host, kb);
  for (auto t : verts) {
    // Group parallel residual edges by head, ordered by their smallest id.
    std::vector<std::pair<VertexId, std::vector<EdgeId>>> groups;
    for (auto e : host.out_edges(t)) {
      if (used[e.index]) continue;
      const auto head = host.edge(e).head;
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == head; });
      if (it == groups.end()) {
        groups.push_back({head, {e}});
      } else {
        it->second.push_back(e);
      }
    }
    for (auto& [head, ids] : groups) {
      const auto cap = std::min<std::int64_t>(static_cast<std::int64_t>(ids.size()), k);
      add(aux.node(t), aux.node(head), cap, {Kind::kResidualEdges, 0, std::move(ids), 0});
    }
  }
  const auto bundles = host.bundles();
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (bundles[i].tail == bundles[i].head) continue;
    add(aux.node(bundles[i].tail), aux.node(bundles[i].head), k, {Kind::kBundle, 0, {}, i});
  }

  aux.network.source = aux.source();
  aux.network.sink = aux.node(sink);
  return aux;
}

std::optional<CutCertificate> check_condition_flow(const Digraph& host, const KBranching& kb) {
  const auto k = static_cast<std::int64_t>(kb.size());
  if (k == 0 || host.vertex_count() == 0) return std::nullopt;
  auto aux = build_auxiliary(host, kb, *host.vertices().begin());
  for (auto w : host.vertices()) {
    aux.network.sink = aux.node(w);
    const auto flow = max_flow(aux.network);
    if (flow.value >= k) continue;
    const auto x = aux.vertices_of(flow.sink_side_min);
    const auto p = p_value(host, kb, x);
    if (x.empty() || !p.deficit()) {
      throw std::logic_error("flow cut did not yield a violating set for vertex '" + host.vertex_name(w) + "'");
    }
    return CutCertificate{x, p.rho, p.s};
  }
  return std::nullopt;
}

SetStatus status(const Digraph& host, const KBranching& kb, const VertexSet& x, std::size_t j) {
  if (x.empty()) throw InputError("status of the empty set is undefined");
  if (j >= kb.size()) throw InputError("branching index out of range");
  SetStatus st;
  st.vertices = x;
  st.p = p_value(host, kb, x);
  st.tight = st.p.rho == Card(st.p.s);
  if (st.tight) {
    for (std::size_t i = 0; i < kb.size(); ++i) {
      if (intersects(kb[i].vertices, x)) st.dangerous_for.push_back(i);
    }
  }
  st.dangerous = std::find(st.dangerous_for.begin(), st.dangerous_for.end(), j) != st.dangerous_for.end();
  return st;
}

std::optional<VertexSet> minimal_dangerous_for_edge(const Digraph& host, const KBranching& kb, std::size_t j,
                                                    EdgeId e) {
  if (j >= kb.size()) throw InputError("branching index out of range");
  if (!host.has_edge(e)) throw InputError("edge is not in the graph");
  const auto edge = host.edge(e);
  for (const auto& b : kb.branchings) {
    if (std::binary_search(b.edges.begin(), b.edges.end(), e)) {
      throw InputError("edge '" + host.edge_name(e) + "' is already used by a branching");
    }
  }
  if (!kb[j].vertices.contains(edge.tail) || kb[j].vertices.contains(edge.head)) {
    throw InputError("edge '" + host.edge_name(e) + "' does not leave the vertex set of branching " +
                     std::to_string(j));
  }

  // Every set violated by B_j + e contains end(e), so a single flow toward
  // end(e) decides safety, and its smallest min-cut sink side is contained
  // in every violated set.
  KBranching extended = kb;
  extended[j] = add_path(host, kb[j], Path{edge.tail, {e}});
  auto aux = build_auxiliary(host, extended, edge.head);
  const auto flow = max_flow(aux.network);
  if (flow.value >= static_cast<std::int64_t>(kb.size())) return std::nullopt;

  auto x = aux.vertices_of(flow.sink_side_min);
  const auto st = status(host, kb, x, j);
  if (!st.dangerous || x.contains(edge.tail) || !x.contains(edge.head)) {
    throw std::logic_error("extracted set is not dangerous for the tentative edge '" + host.edge_name(e) + "'");
  }
  return x;
}

}  // namespace branchpack

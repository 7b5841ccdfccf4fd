#include "branchpack/branching.hpp"

#include <algorithm>

#include "branchpack/errors.hpp"

namespace branchpack {

std::vector<VertexId> path_vertices(const Digraph& host, const Path& p) {
  std::vector<VertexId> out{p.start};
  for (auto id : p.edges) {
    const auto e = host.edge(id);
    if (e.tail != out.back()) {
      throw StructuralError("path edge '" + host.edge_name(id) + "' does not continue the path");
    }
    out.push_back(e.head);
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw StructuralError("path repeats a vertex");
  }
  return out;
}

Branching Branching::edgeless(VertexSet roots) {
  Branching b;
  b.vertices = roots;
  b.roots = std::move(roots);
  return b;
}

KBranching KBranching::edgeless(const std::vector<VertexSet>& roots) {
  KBranching kb;
  for (const auto& r : roots) kb.branchings.push_back(Branching::edgeless(r));
  return kb;
}

std::optional<BranchingViolation> verify(const Digraph& host, const Branching& b) {
  host.require_vertices(b.vertices);
  host.require_vertices(b.roots);
  for (auto id : b.edges) {
    if (!host.has_edge(id)) {
      throw InputError("branching edge index " + std::to_string(id.index) + " is not in the host graph");
    }
  }
  auto fail = [&](BranchingDefect d, std::optional<VertexId> v, std::optional<EdgeId> e, std::string msg) {
    return BranchingViolation{d, v, e, std::move(msg)};
  };
  if (b.roots.empty()) return fail(BranchingDefect::kEmptyRoots, {}, {}, "root set is empty");
  for (auto r : b.roots) {
    if (!b.vertices.contains(r)) {
      return fail(BranchingDefect::kRootOutsideVertices, r, {},
                  "root '" + host.vertex_name(r) + "' is not a vertex of the branching");
    }
  }

  std::vector<std::optional<EdgeId>> parent(host.vertex_universe());
  for (auto id : b.edges) {
    const auto e = host.edge(id);
    if (!b.vertices.contains(e.tail) || !b.vertices.contains(e.head)) {
      return fail(BranchingDefect::kEdgeOutsideVertices, {}, id,
                  "edge '" + host.edge_name(id) + "' leaves the branching's vertex set");
    }
    if (b.roots.contains(e.head)) {
      return fail(BranchingDefect::kRootHasInEdge, e.head, id,
                  "root '" + host.vertex_name(e.head) + "' has an in-edge");
    }
    if (parent[e.head.index]) {
      return fail(BranchingDefect::kWrongInDegree, e.head, id,
                  "vertex '" + host.vertex_name(e.head) + "' has more than one in-edge");
    }
    parent[e.head.index] = id;
  }
  for (auto v : b.vertices) {
    if (!b.roots.contains(v) && !parent[v.index]) {
      return fail(BranchingDefect::kWrongInDegree, v, {},
                  "vertex '" + host.vertex_name(v) + "' has no in-edge");
    }
  }

  // Every non-root has exactly one parent, so climbing either reaches a root
  // or closes a cycle.
  std::vector<char> state(host.vertex_universe(), 0);  // 0 new, 1 on stack, 2 rooted
  for (auto r : b.roots) state[r.index] = 2;
  for (auto v : b.vertices) {
    std::vector<VertexId> chain;
    auto at = v;
    while (state[at.index] == 0) {
      state[at.index] = 1;
      chain.push_back(at);
      at = host.edge(*parent[at.index]).tail;
    }
    if (state[at.index] == 1) {
      return fail(BranchingDefect::kCycle, at, parent[at.index],
                  "cycle through vertex '" + host.vertex_name(at) + "'");
    }
    for (auto c : chain) state[c.index] = 2;
  }
  for (auto v : b.vertices) {
    if (state[v.index] != 2) {
      return fail(BranchingDefect::kUnreachable, v, {},
                  "vertex '" + host.vertex_name(v) + "' is unreachable from the roots");
    }
  }
  return std::nullopt;
}

std::optional<KBranchingViolation> verify(const Digraph& host, const KBranching& kb) {
  std::vector<int> owner(host.edge_universe(), -1);
  for (std::size_t i = 0; i < kb.size(); ++i) {
    if (auto v = verify(host, kb[i])) {
      return KBranchingViolation{i, v, {}, "branching " + std::to_string(i) + ": " + v->message};
    }
    for (auto e : kb[i].edges) {
      if (owner[e.index] >= 0) {
        return KBranchingViolation{i, {}, e,
                                   "edge '" + host.edge_name(e) + "' is shared by branchings " +
                                       std::to_string(owner[e.index]) + " and " + std::to_string(i)};
      }
      owner[e.index] = static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::vector<EdgeId> used_edges(const KBranching& kb) {
  std::vector<EdgeId> all;
  for (const auto& b : kb.branchings) all.insert(all.end(), b.edges.begin(), b.edges.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Digraph residual(const Digraph& host, const KBranching& kb) {
  return remove_edges(host, used_edges(kb));
}

Branching add_path(const Digraph& host, const Branching& b, const Path& p) {
  const auto verts = path_vertices(host, p);
  if (!b.vertices.contains(p.start)) {
    throw StructuralError("path starts at '" + host.vertex_name(p.start) + "', outside the branching");
  }
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (b.vertices.contains(verts[i])) {
      throw StructuralError("path meets the branching again at '" + host.vertex_name(verts[i]) + "'");
    }
  }
  Branching out = b;
  for (std::size_t i = 1; i < verts.size(); ++i) out.vertices.insert(verts[i]);
  out.edges.insert(out.edges.end(), p.edges.begin(), p.edges.end());
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace branchpack

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branchpack/digraph.hpp"

namespace branchpack {

/// A directed path given by its start vertex and edge sequence. A path with
/// no edges is the single vertex `start`.
struct Path {
  VertexId start;
  std::vector<EdgeId> edges;
};

/// Vertex sequence of `p` in `host`. Throws StructuralError if consecutive
/// edges do not chain or a vertex repeats.
std::vector<VertexId> path_vertices(const Digraph& host, const Path& p);

/// Vertex-disjoint union of arborescences rooted at `roots`.
struct Branching {
  VertexSet roots;
  VertexSet vertices;
  std::vector<EdgeId> edges;  // ascending

  static Branching edgeless(VertexSet roots);
};

enum class BranchingDefect {
  kEmptyRoots,
  kRootOutsideVertices,
  kEdgeOutsideVertices,
  kRootHasInEdge,
  kWrongInDegree,
  kCycle,
  kUnreachable,
};

struct BranchingViolation {
  BranchingDefect defect;
  std::optional<VertexId> vertex;
  std::optional<EdgeId> edge;
  std::string message;
};

/// Checks the branching invariants against `host`. Returns the first
/// violation found, or nullopt. Throws InputError on an edge absent from
/// `host`.
std::optional<BranchingViolation> verify(const Digraph& host, const Branching& b);

/// Ordered tuple of pairwise edge-disjoint branchings.
struct KBranching {
  std::vector<Branching> branchings;

  std::size_t size() const { return branchings.size(); }
  const Branching& operator[](std::size_t i) const { return branchings[i]; }
  Branching& operator[](std::size_t i) { return branchings[i]; }

  static KBranching edgeless(const std::vector<VertexSet>& roots);
};

struct KBranchingViolation {
  std::size_t index = 0;
  std::optional<BranchingViolation> branching;  // empty for a shared edge
  std::optional<EdgeId> shared_edge;
  std::string message;
};

/// Verifies every member plus pairwise edge-disjointness.
std::optional<KBranchingViolation> verify(const Digraph& host, const KBranching& kb);

/// All edges used by any member, ascending.
std::vector<EdgeId> used_edges(const KBranching& kb);

/// host minus every edge of kb. Bundles are untouched.
Digraph residual(const Digraph& host, const KBranching& kb);

/// b + p. Requires V(b) and V(p) to share exactly start(p); throws
/// StructuralError otherwise.
Branching add_path(const Digraph& host, const Branching& b, const Path& p);

}  // namespace branchpack

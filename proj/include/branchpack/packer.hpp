#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "branchpack/branching.hpp"
#include "branchpack/cuts.hpp"
#include "branchpack/digraph.hpp"

namespace branchpack {

struct SystemPath {
  /// Branching index for path_system_to; position of the entering edge
  /// among the in-edges of the outer set for path_system_nested.
  std::size_t label = 0;
  Path path;
};

/// Pairwise edge-disjoint paths. `host` is the input graph plus any edges
/// drawn from bundles to realise the paths.
struct PathSystem {
  Digraph host;
  std::vector<SystemPath> paths;
};

struct ReachOutcome {
  Digraph host;
  std::optional<Path> path;
  /// Vertices of B not reachable from V_j within B; empty when a path exists.
  VertexSet unreachable;
};

/// BFS inside the residual graph restricted to `b`, from V_j n B to `w`.
/// Vertices are expanded in FIFO order, explicit edges by ascending id
/// before bundles.
ReachOutcome reach_in_set(const Digraph& host, const KBranching& kb, std::size_t j, const VertexSet& b,
                          VertexId w);

/// Residual explicit edges leaving V_j whose addition to B_j keeps the cut
/// condition, ascending by id. Draws from bundles are always safe and are
/// not listed.
std::vector<EdgeId> safe_edges(const Digraph& host, const KBranching& kb, std::size_t j);

struct Extension {
  Digraph host;
  KBranching kb;
  std::vector<EdgeId> added;  // in the order they were attached
};

/// Grows B_j edge by edge until it contains `v`, keeping the cut condition.
/// Each step attaches the safe edge whose head is closest to `v` in the
/// residual graph (explicit edges before bundle draws, then by id).
/// Requires kb to satisfy the cut condition.
Extension extend_toward(const Digraph& host, const KBranching& kb, std::size_t j, VertexId v);

/// k edge-disjoint paths, path i going from V_i to `w`, or the certificate
/// explaining why they cannot exist.
std::variant<PathSystem, CutCertificate> path_system_to(const Digraph& host, const KBranching& kb, VertexId w);

/// For tight sets inner c outer with the same finite in-degree l >= 1: l
/// edge-disjoint paths inside the residual graph on `outer`, the j-th one
/// starting at the head of the j-th in-edge of `outer` and ending at its
/// first vertex in `inner`.
PathSystem path_system_nested(const Digraph& host, const KBranching& kb, const VertexSet& outer,
                              const VertexSet& inner);

struct TraceEntry {
  std::size_t step = 0;
  VertexId vertex;
  std::size_t branching = 0;
  std::vector<EdgeId> path;
};

struct PackReport {
  Digraph host;  // input graph plus bundle draws used by the packing
  std::optional<KBranching> packing;
  std::optional<CutCertificate> certificate;
  std::vector<TraceEntry> trace;

  bool packed() const { return packing.has_value(); }
};

/// Extends `initial` (or edgeless branchings on `roots`) to edge-disjoint
/// spanning branchings with the same root sets, visiting vertices in
/// ascending id order, or returns a certificate when the cut condition
/// fails.
PackReport pack(const Digraph& host, const std::vector<VertexSet>& roots,
                const std::optional<KBranching>& initial = std::nullopt);

}  // namespace branchpack

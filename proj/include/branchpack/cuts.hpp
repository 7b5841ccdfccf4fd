#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "branchpack/branching.hpp"
#include "branchpack/cardinal.hpp"
#include "branchpack/digraph.hpp"
#include "branchpack/maxflow.hpp"

namespace branchpack {

/// Witness that the cut condition fails: rho(X) < s(X) in the residual graph.
struct CutCertificate {
  VertexSet vertices;
  Card rho;
  std::uint32_t s = 0;
};

/// Number of branchings whose vertex set misses `x`.
std::uint32_t s_value(const Digraph& host, const KBranching& kb, const VertexSet& x);

/// rho(X) - s(X) in the residual graph, with aleph0 - n = aleph0. A negative
/// difference is reported as a deficit rather than a value.
struct Deficiency {
  Card rho;
  std::uint32_t s = 0;

  bool deficit() const { return rho < Card(s); }
  /// Throws CardUnderflow when deficit() holds.
  Card value() const { return card_sub(rho, s); }
};

Deficiency p_value(const Digraph& host, const KBranching& kb, const VertexSet& x);

/// Re-evaluates a certificate from scratch.
bool certificate_holds(const Digraph& host, const KBranching& kb, const CutCertificate& cert);

inline constexpr std::size_t kDefaultBruteForceBound = 20;

/// Enumerates every nonempty X and returns the lexicographically first one
/// (over ascending vertex-id sequences) violating the cut condition. Throws
/// InputError when the graph has more than `bound` vertices.
std::optional<CutCertificate> check_condition_bruteforce(const Digraph& host, const KBranching& kb,
                                                         std::size_t bound = kDefaultBruteForceBound);

/// Flow network for the disjoint-paths test toward `sink`.
///
/// Node 0 is the super-source s, nodes 1..k stand for the branchings, the
/// remaining nodes are the host vertices in ascending id order. Arcs are
/// s -> branch (capacity 1), branch i -> every vertex of branching i
/// (capacity k), one arc per ordered pair of residual explicit edges
/// (multiplicity summed, capped at k), and one arc of capacity k per
/// non-loop bundle.
struct AuxiliaryNetwork {
  enum class ArcKind { kSourceToBranch, kBranchToVertex, kResidualEdges, kBundle, kToSink };
  struct ArcOrigin {
    ArcKind kind = ArcKind::kSourceToBranch;
    std::size_t branch = 0;
    std::vector<EdgeId> edges;  // kResidualEdges only, ascending
    std::size_t bundle = 0;     // kBundle only, index into host.bundles()
  };

  FlowNetwork network;
  std::vector<ArcOrigin> origins;
  std::vector<VertexId> vertex_of_node;     // indexed by node; valid from first_vertex_node on
  std::vector<std::int64_t> node_of_vertex;  // indexed by vertex id; -1 when absent
  std::uint32_t first_vertex_node = 1;

  std::uint32_t source() const { return 0; }
  std::uint32_t branch_node(std::size_t i) const { return static_cast<std::uint32_t>(1 + i); }
  std::uint32_t node(VertexId v) const;
  bool is_vertex_node(std::uint32_t n) const { return n >= first_vertex_node; }
  /// Host vertices among `nodes`.
  VertexSet vertices_of(std::span<const std::uint32_t> nodes) const;
};

AuxiliaryNetwork build_auxiliary(const Digraph& host, const KBranching& kb, VertexId sink);

/// Flow-based check: condition holds iff every vertex receives k units in
/// its auxiliary network. On failure returns the certificate for the
/// smallest failing vertex, extracted from the smallest minimum-cut sink
/// side. Throws std::logic_error if that certificate does not re-validate.
std::optional<CutCertificate> check_condition_flow(const Digraph& host, const KBranching& kb);

struct SetStatus {
  VertexSet vertices;
  Deficiency p;
  bool tight = false;
  /// Indices j such that X meets V_j and X is tight.
  std::vector<std::size_t> dangerous_for;
  /// Whether X is dangerous for the queried index.
  bool dangerous = false;
};

/// Tightness and dangerousness of `x`; throws InputError on an empty or
/// foreign set or an out-of-range index.
SetStatus status(const Digraph& host, const KBranching& kb, const VertexSet& x, std::size_t j);

/// For a residual edge e leaving V_j, the inclusion-minimal set that is
/// dangerous for j and entered by e, or nullopt when B_j + e keeps the cut
/// condition. Assumes kb satisfies the condition.
std::optional<VertexSet> minimal_dangerous_for_edge(const Digraph& host, const KBranching& kb, std::size_t j,
                                                    EdgeId e);

}  // namespace branchpack

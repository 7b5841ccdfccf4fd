#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "branchpack/cardinal.hpp"

namespace branchpack {

/// Vertex handle. Indices are assigned in insertion order and stay valid in
/// every graph derived from the one that created them (induced subgraphs,
/// edge removals, bundle draws), so "ascending id" is insertion order.
struct VertexId {
  std::uint32_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Edge handle; same stability guarantees as VertexId.
struct EdgeId {
  std::uint32_t index = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;
  bool is_loop() const { return tail == head; }
};

/// Countably many parallel edges tail -> head.
struct Bundle {
  VertexId tail;
  VertexId head;
  Card multiplicity() const { return Card::aleph0(); }
  friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  bool contains(VertexId v) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  void insert(VertexId v);

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<VertexId>& ids() const { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<VertexId> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

class Digraph;
struct Materialized;

namespace detail {
struct EdgeRecord {
  std::string name;
  VertexId tail;
  VertexId head;
};
}  // namespace detail

/// Accumulates vertices, edges and bundles, then freezes them into a Digraph.
class DigraphBuilder {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId tail, VertexId head);
  EdgeId add_edge(std::string name, std::string_view tail, std::string_view head);
  void add_bundle(VertexId tail, VertexId head);
  void add_bundle(std::string_view tail, std::string_view head);

  VertexId vertex(std::string_view name) const;

  Digraph build() &&;

 private:
  friend class Digraph;
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, std::uint32_t> vertex_index_;
  std::vector<detail::EdgeRecord> edges_;
  std::unordered_map<std::string, std::uint32_t> edge_index_;
  std::vector<Bundle> bundles_;
};

/// Finite directed multigraph with named vertices and edges plus aleph0
/// bundles. Immutable; every transformation returns a new graph.
class Digraph {
 public:
  Digraph() = default;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t vertex_universe() const { return vertex_names_.size(); }
  std::size_t edge_universe() const { return edges_.size(); }

  /// Present vertices in ascending id order.
  const VertexSet& vertices() const { return vertices_; }
  bool has_vertex(VertexId v) const;
  const std::string& vertex_name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws InputError if the name is unknown or the vertex is absent.
  VertexId vertex(std::string_view name) const;

  /// Present explicit edges in ascending id order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(EdgeId e) const;
  /// Throws InputError if absent.
  Edge edge(EdgeId e) const;
  const std::string& edge_name(EdgeId e) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  EdgeId edge_by_name(std::string_view name) const;

  std::span<const Bundle> bundles() const { return bundles_; }
  std::optional<std::size_t> find_bundle(VertexId tail, VertexId head) const;

  std::span<const EdgeId> in_edges(VertexId v) const { return in_edges_[v.index]; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_edges_[v.index]; }

  /// Throws InputError naming the first id in `x` that is not a vertex.
  void require_vertices(const VertexSet& x) const;

  /// Membership mask over the vertex universe.
  std::vector<char> mask(const VertexSet& x) const;

 private:
  friend class DigraphBuilder;
  friend Digraph induced(const Digraph& d, const VertexSet& b);
  friend Digraph remove_edges(const Digraph& d, std::span<const EdgeId> ids);
  friend Materialized materialize(const Digraph& d, const Bundle& bundle, std::size_t count);

  void rebuild_indices();

  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, std::uint32_t> vertex_index_;
  std::vector<char> vertex_present_;
  std::vector<detail::EdgeRecord> edges_;
  std::unordered_map<std::string, std::uint32_t> edge_index_;
  std::vector<char> edge_present_;
  std::vector<Bundle> bundles_;

  VertexSet vertices_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<EdgeId>> in_edges_;
  std::vector<std::vector<EdgeId>> out_edges_;
};

/// In-degree of `x`: explicit non-loop edges entering it, or aleph0 if any
/// bundle enters it.
Card rho(const Digraph& d, const VertexSet& x);

/// Out-degree counterpart of rho.
Card delta(const Digraph& d, const VertexSet& x);

struct EdgesBetween {
  std::vector<Edge> edges;
  std::vector<Bundle> bundles;
};

/// All explicit edges and bundles with tail in `x` and head in `y`.
EdgesBetween edges_between(const Digraph& d, const VertexSet& x, const VertexSet& y);

/// Subgraph spanned by `b`. Ids are preserved.
Digraph induced(const Digraph& d, const VertexSet& b);

/// Same graph without the listed explicit edges.
Digraph remove_edges(const Digraph& d, std::span<const EdgeId> ids);

struct Materialized {
  Digraph graph;
  std::vector<EdgeId> new_edges;
};

/// Draws `count` fresh explicit edges from a bundle. The bundle stays, since
/// aleph0 minus a finite number is still aleph0. Fresh edges are named
/// "bundle:<tail>><head>#<n>".
Materialized materialize(const Digraph& d, const Bundle& bundle, std::size_t count);

}  // namespace branchpack

#include "branchpack/digraph.hpp"

#include <algorithm>
#include <iterator>

#include "branchpack/errors.hpp"

namespace branchpack {

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(VertexId v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// DigraphBuilder

VertexId DigraphBuilder::add_vertex(std::string name) {
  const auto index = static_cast<std::uint32_t>(vertex_names_.size());
  if (!vertex_index_.emplace(name, index).second) {
    throw InputError("duplicate vertex id '" + name + "'");
  }
  vertex_names_.push_back(std::move(name));
  return VertexId{index};
}

VertexId DigraphBuilder::vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) throw InputError("unknown vertex '" + std::string(name) + "'");
  return VertexId{it->second};
}

EdgeId DigraphBuilder::add_edge(std::string name, VertexId tail, VertexId head) {
  if (tail.index >= vertex_names_.size() || head.index >= vertex_names_.size()) {
    throw InputError("edge '" + name + "' has an endpoint outside the vertex set");
  }
  const auto index = static_cast<std::uint32_t>(edges_.size());
  if (!edge_index_.emplace(name, index).second) {
    throw InputError("duplicate edge id '" + name + "'");
  }
  edges_.push_back({std::move(name), tail, head});
  return EdgeId{index};
}

EdgeId DigraphBuilder::add_edge(std::string name, std::string_view tail, std::string_view head) {
  return add_edge(std::move(name), vertex(tail), vertex(head));
}

void DigraphBuilder::add_bundle(VertexId tail, VertexId head) {
  if (tail.index >= vertex_names_.size() || head.index >= vertex_names_.size()) {
    throw InputError("bundle endpoint outside the vertex set");
  }
  for (const auto& b : bundles_) {
    if (b.tail == tail && b.head == head) {
      throw InputError("duplicate bundle " + vertex_names_[tail.index] + " -> " +
                       vertex_names_[head.index]);
    }
  }
  bundles_.push_back({tail, head});
}

void DigraphBuilder::add_bundle(std::string_view tail, std::string_view head) {
  add_bundle(vertex(tail), vertex(head));
}

Digraph DigraphBuilder::build() && {
  Digraph d;
  d.vertex_names_ = std::move(vertex_names_);
  d.vertex_index_ = std::move(vertex_index_);
  d.vertex_present_.assign(d.vertex_names_.size(), 1);
  d.edges_ = std::move(edges_);
  d.edge_index_ = std::move(edge_index_);
  d.edge_present_.assign(d.edges_.size(), 1);
  d.bundles_ = std::move(bundles_);
  d.rebuild_indices();
  return d;
}

// ---------------------------------------------------------------------------
// Digraph

void Digraph::rebuild_indices() {
  std::vector<VertexId> present;
  for (std::uint32_t i = 0; i < vertex_names_.size(); ++i) {
    if (vertex_present_[i]) present.push_back(VertexId{i});
  }
  vertex_count_ = present.size();
  vertices_ = VertexSet(std::move(present));

  in_edges_.assign(vertex_names_.size(), {});
  out_edges_.assign(vertex_names_.size(), {});
  edge_count_ = 0;
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (!edge_present_[i]) continue;
    ++edge_count_;
    const auto& rec = edges_[i];
    if (rec.tail == rec.head) continue;
    out_edges_[rec.tail.index].push_back(EdgeId{i});
    in_edges_[rec.head.index].push_back(EdgeId{i});
  }
}

bool Digraph::has_vertex(VertexId v) const {
  return v.index < vertex_present_.size() && vertex_present_[v.index];
}

const std::string& Digraph::vertex_name(VertexId v) const {
  if (v.index >= vertex_names_.size()) throw InputError("vertex index out of range");
  return vertex_names_[v.index];
}

std::optional<VertexId> Digraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end() || !vertex_present_[it->second]) return std::nullopt;
  return VertexId{it->second};
}

VertexId Digraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw InputError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (edge_present_[i]) out.push_back({EdgeId{i}, edges_[i].tail, edges_[i].head});
  }
  return out;
}

bool Digraph::has_edge(EdgeId e) const {
  return e.index < edge_present_.size() && edge_present_[e.index];
}

Edge Digraph::edge(EdgeId e) const {
  if (!has_edge(e)) throw InputError("unknown edge index " + std::to_string(e.index));
  return {e, edges_[e.index].tail, edges_[e.index].head};
}

const std::string& Digraph::edge_name(EdgeId e) const {
  if (e.index >= edges_.size()) throw InputError("edge index out of range");
  return edges_[e.index].name;
}

std::optional<EdgeId> Digraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end() || !edge_present_[it->second]) return std::nullopt;
  return EdgeId{it->second};
}

EdgeId Digraph::edge_by_name(std::string_view name) const {
  auto e = find_edge(name);
  if (!e) throw InputError("unknown edge '" + std::string(name) + "'");
  return *e;
}

std::optional<std::size_t> Digraph::find_bundle(VertexId tail, VertexId head) const {
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    if (bundles_[i].tail == tail && bundles_[i].head == head) return i;
  }
  return std::nullopt;
}

void Digraph::require_vertices(const VertexSet& x) const {
  for (auto v : x) {
    if (!has_vertex(v)) {
      const std::string label =
          v.index < vertex_names_.size() ? vertex_names_[v.index] : "#" + std::to_string(v.index);
      throw InputError("vertex '" + label + "' is not in the graph");
    }
  }
}

std::vector<char> Digraph::mask(const VertexSet& x) const {
  std::vector<char> m(vertex_names_.size(), 0);
  for (auto v : x) m[v.index] = 1;
  return m;
}

// ---------------------------------------------------------------------------
// Cut primitives

Card rho(const Digraph& d, const VertexSet& x) {
  d.require_vertices(x);
  const auto in = d.mask(x);
  for (const auto& b : d.bundles()) {
    if (!in[b.tail.index] && in[b.head.index]) return Card::aleph0();
  }
  std::uint64_t count = 0;
  for (auto v : x) {
    for (auto e : d.in_edges(v)) {
      if (!in[d.edge(e).tail.index]) ++count;
    }
  }
  return Card(count);
}

Card delta(const Digraph& d, const VertexSet& x) {
  d.require_vertices(x);
  const auto in = d.mask(x);
  for (const auto& b : d.bundles()) {
    if (in[b.tail.index] && !in[b.head.index]) return Card::aleph0();
  }
  std::uint64_t count = 0;
  for (auto v : x) {
    for (auto e : d.out_edges(v)) {
      if (!in[d.edge(e).head.index]) ++count;
    }
  }
  return Card(count);
}

EdgesBetween edges_between(const Digraph& d, const VertexSet& x, const VertexSet& y) {
  d.require_vertices(x);
  d.require_vertices(y);
  EdgesBetween out;
  const auto in_x = d.mask(x);
  const auto in_y = d.mask(y);
  for (const auto& e : d.edges()) {
    if (in_x[e.tail.index] && in_y[e.head.index]) out.edges.push_back(e);
  }
  for (const auto& b : d.bundles()) {
    if (in_x[b.tail.index] && in_y[b.head.index]) out.bundles.push_back(b);
  }
  return out;
}

Digraph induced(const Digraph& d, const VertexSet& b) {
  d.require_vertices(b);
  Digraph out = d;
  const auto keep = d.mask(b);
  for (std::size_t i = 0; i < out.vertex_present_.size(); ++i) {
    out.vertex_present_[i] = out.vertex_present_[i] && keep[i];
  }
  for (std::size_t i = 0; i < out.edges_.size(); ++i) {
    const auto& rec = out.edges_[i];
    if (!keep[rec.tail.index] || !keep[rec.head.index]) out.edge_present_[i] = 0;
  }
  std::erase_if(out.bundles_, [&](const Bundle& bu) { return !keep[bu.tail.index] || !keep[bu.head.index]; });
  out.rebuild_indices();
  return out;
}

Digraph remove_edges(const Digraph& d, std::span<const EdgeId> ids) {
  Digraph out = d;
  for (auto e : ids) {
    if (!d.has_edge(e)) throw InputError("cannot remove unknown edge index " + std::to_string(e.index));
    out.edge_present_[e.index] = 0;
  }
  out.rebuild_indices();
  return out;
}

Materialized materialize(const Digraph& d, const Bundle& bundle, std::size_t count) {
  if (!d.find_bundle(bundle.tail, bundle.head)) throw InputError("unknown bundle");
  Materialized out{d, {}};
  Digraph& g = out.graph;
  const std::string prefix =
      "bundle:" + d.vertex_name(bundle.tail) + ">" + d.vertex_name(bundle.head) + "#";
  std::size_t serial = 0;
  for (std::size_t n = 0; n < count; ++n) {
    std::string name;
    do {
      name = prefix + std::to_string(serial++);
    } while (g.edge_index_.contains(name));
    const auto index = static_cast<std::uint32_t>(g.edges_.size());
    g.edge_index_.emplace(name, index);
    g.edges_.push_back({std::move(name), bundle.tail, bundle.head});
    g.edge_present_.push_back(1);
    out.new_edges.push_back(EdgeId{index});
  }
  g.rebuild_indices();
  return out;
}

}  // namespace branchpack

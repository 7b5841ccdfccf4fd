#include "branchpack/packer.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "branchpack/errors.hpp"

namespace branchpack {

namespace {

std::vector<char> used_mask(const Digraph& host, const KBranching& kb) {
  std::vector<char> used(host.edge_universe(), 0);
  for (auto e : used_edges(kb)) used[e.index] = 1;
  return used;
}

void require_index(const KBranching& kb, std::size_t j) {
  if (j >= kb.size()) throw InputError("branching index " + std::to_string(j) + " out of range");
}

// One edge of a path under construction: an explicit edge, or a draw from
// the bundle with the given index.
struct Step {
  std::optional<EdgeId> edge;
  std::size_t bundle = 0;
};

// Replaces bundle steps with freshly drawn edges and returns the edge list.
std::vector<EdgeId> realise(Digraph& host, const std::vector<Step>& steps) {
  std::vector<EdgeId> out;
  for (const auto& step : steps) {
    if (step.edge) {
      out.push_back(*step.edge);
      continue;
    }
    const Bundle bundle = host.bundles()[step.bundle];
    auto drawn = materialize(host, bundle, 1);
    host = std::move(drawn.graph);
    out.push_back(drawn.new_edges.front());
  }
  return out;
}

// Residual distance from every vertex to `target` (explicit edges and
// bundles); unreachable vertices get max().
std::vector<std::size_t> distances_to(const Digraph& host, const std::vector<char>& used, VertexId target) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(host.vertex_universe(), kInf);
  std::vector<std::vector<VertexId>> bundle_in(host.vertex_universe());
  for (const auto& b : host.bundles()) bundle_in[b.head.index].push_back(b.tail);
  std::deque<VertexId> queue{target};
  dist[target.index] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    auto relax = [&](VertexId u) {
      if (dist[u.index] == kInf) {
        dist[u.index] = dist[v.index] + 1;
        queue.push_back(u);
      }
    };
    for (auto e : host.in_edges(v)) {
      if (!used[e.index]) relax(host.edge(e).tail);
    }
    for (auto u : bundle_in[v.index]) relax(u);
  }
  return dist;
}

}  // namespace

// ---------------------------------------------------------------------------

ReachOutcome reach_in_set(const Digraph& host, const KBranching& kb, std::size_t j, const VertexSet& b,
                          VertexId w) {
  require_index(kb, j);
  host.require_vertices(b);
  if (!b.contains(w)) throw InputError("target '" + host.vertex_name(w) + "' is not in the set");

  const auto used = used_mask(host, kb);
  const auto inside = host.mask(b);
  std::vector<std::optional<Step>> parent(host.vertex_universe());
  std::vector<char> seen(host.vertex_universe(), 0);
  std::deque<VertexId> queue;
  for (auto v : set_intersection(kb[j].vertices, b)) {
    seen[v.index] = 1;
    queue.push_back(v);
  }
  const auto bundles = host.bundles();
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto e : host.out_edges(u)) {
      const auto h = host.edge(e).head;
      if (used[e.index] || !inside[h.index] || seen[h.index]) continue;
      seen[h.index] = 1;
      parent[h.index] = Step{e, 0};
      queue.push_back(h);
    }
    for (std::size_t i = 0; i < bundles.size(); ++i) {
      const auto h = bundles[i].head;
      if (bundles[i].tail != u || !inside[h.index] || seen[h.index]) continue;
      seen[h.index] = 1;
      parent[h.index] = Step{std::nullopt, i};
      queue.push_back(h);
    }
  }

  ReachOutcome out{host, std::nullopt, {}};
  if (!seen[w.index]) {
    std::vector<VertexId> missing;
    for (auto v : b) {
      if (!seen[v.index]) missing.push_back(v);
    }
    out.unreachable = VertexSet(std::move(missing));
    return out;
  }
  std::vector<Step> steps;
  auto at = w;
  while (parent[at.index]) {
    const auto& step = *parent[at.index];
    steps.push_back(step);
    at = step.edge ? host.edge(*step.edge).tail : bundles[step.bundle].tail;
  }
  std::reverse(steps.begin(), steps.end());
  out.path = Path{at, realise(out.host, steps)};
  return out;
}

std::vector<EdgeId> safe_edges(const Digraph& host, const KBranching& kb, std::size_t j) {
  require_index(kb, j);
  const auto used = used_mask(host, kb);
  std::vector<EdgeId> candidates;
  for (auto u : kb[j].vertices) {
    for (auto e : host.out_edges(u)) {
      if (!used[e.index] && !kb[j].vertices.contains(host.edge(e).head)) candidates.push_back(e);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<EdgeId> out;
  for (auto e : candidates) {
    if (!minimal_dangerous_for_edge(host, kb, j, e)) out.push_back(e);
  }
  return out;
}

Extension extend_toward(const Digraph& host, const KBranching& kb, std::size_t j, VertexId v) {
  require_index(kb, j);
  if (!host.has_vertex(v)) throw InputError("target vertex is not in the graph");
  if (kb[j].vertices.contains(v)) {
    throw InputError("vertex '" + host.vertex_name(v) + "' already belongs to branching " + std::to_string(j));
  }

  Extension ext{host, kb, {}};
  while (!ext.kb[j].vertices.contains(v)) {
    const auto& current = ext.kb[j].vertices;
    const auto used = used_mask(ext.host, ext.kb);
    const auto dist = distances_to(ext.host, used, v);

    // (distance of head, bundle?, id or bundle index)
    std::vector<std::tuple<std::size_t, int, std::size_t>> candidates;
    for (auto u : current) {
      for (auto e : ext.host.out_edges(u)) {
        const auto h = ext.host.edge(e).head;
        if (!used[e.index] && !current.contains(h)) candidates.emplace_back(dist[h.index], 0, e.index);
      }
    }
    const auto bundles = ext.host.bundles();
    for (std::size_t i = 0; i < bundles.size(); ++i) {
      if (current.contains(bundles[i].tail) && !current.contains(bundles[i].head)) {
        candidates.emplace_back(dist[bundles[i].head.index], 1, i);
      }
    }
    std::sort(candidates.begin(), candidates.end());

    std::optional<EdgeId> chosen;
    for (const auto& [d, is_bundle, index] : candidates) {
      if (!is_bundle) {
        const EdgeId e{static_cast<std::uint32_t>(index)};
        if (!minimal_dangerous_for_edge(ext.host, ext.kb, j, e)) {
          chosen = e;
          break;
        }
        continue;
      }
      auto drawn = materialize(ext.host, bundles[index], 1);
      const auto e = drawn.new_edges.front();
      if (minimal_dangerous_for_edge(drawn.graph, ext.kb, j, e)) {
        throw std::logic_error("a bundle draw was reported unsafe");
      }
      ext.host = std::move(drawn.graph);
      chosen = e;
      break;
    }
    if (!chosen) {
      throw std::logic_error("no safe edge leaves branching " + std::to_string(j) + " while '" +
                             ext.host.vertex_name(v) + "' is still missing");
    }
    const auto tail = ext.host.edge(*chosen).tail;
    ext.kb[j] = add_path(ext.host, ext.kb[j], Path{tail, {*chosen}});
    ext.added.push_back(*chosen);
  }
  return ext;
}

// ---------------------------------------------------------------------------
// Path systems

namespace {

// Converts the residual arcs of a decomposed flow path into steps, handing
// out the parallel edges of each arc smallest id first.
Step take_step(const AuxiliaryNetwork& aux, std::size_t arc, std::vector<std::size_t>& cursor) {
  const auto& origin = aux.origins[arc];
  if (origin.kind == AuxiliaryNetwork::ArcKind::kBundle) return Step{std::nullopt, origin.bundle};
  if (cursor[arc] >= origin.edges.size()) throw std::logic_error("flow exceeds the parallel edges of an arc");
  return Step{origin.edges[cursor[arc]++], 0};
}

}  // namespace

std::variant<PathSystem, CutCertificate> path_system_to(const Digraph& host, const KBranching& kb, VertexId w) {
  if (!host.has_vertex(w)) throw InputError("target vertex is not in the graph");
  PathSystem system{host, {}};
  if (kb.size() == 0) return system;

  auto aux = build_auxiliary(host, kb, w);
  const auto flow = max_flow(aux.network);
  if (flow.value < static_cast<std::int64_t>(kb.size())) {
    const auto x = aux.vertices_of(flow.sink_side_min);
    const auto p = p_value(host, kb, x);
    if (!p.deficit()) throw std::logic_error("flow deficit without a violating set");
    return CutCertificate{x, p.rho, p.s};
  }

  std::vector<std::size_t> cursor(aux.origins.size(), 0);
  const auto arcs = aux.network.arcs();
  for (const auto& unit : flow.paths) {
    // unit = s -> v_i -> u -> ... -> w
    if (unit.size() < 2) throw std::logic_error("malformed flow path");
    const auto label = aux.origins[unit[0]].branch;
    const auto& roots = kb[label].vertices;
    std::vector<VertexId> verts{aux.vertex_of_node[arcs[unit[1]].head]};
    std::vector<std::size_t> residual_arcs(unit.begin() + 2, unit.end());
    for (auto a : residual_arcs) verts.push_back(aux.vertex_of_node[arcs[a].head]);

    // Start at the last vertex of V_i so the path meets V_i only there.
    std::size_t first = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (roots.contains(verts[i])) first = i;
    }
    std::vector<Step> steps;
    for (std::size_t i = 0; i < residual_arcs.size(); ++i) {
      auto step = take_step(aux, residual_arcs[i], cursor);
      if (i >= first) steps.push_back(step);
    }
    Path path{verts[first], realise(system.host, steps)};
    system.paths.push_back({label, std::move(path)});
  }
  std::sort(system.paths.begin(), system.paths.end(),
            [](const SystemPath& a, const SystemPath& b) { return a.label < b.label; });
  return system;
}

PathSystem path_system_nested(const Digraph& host, const KBranching& kb, const VertexSet& outer,
                              const VertexSet& inner) {
  if (inner.empty()) throw InputError("inner set is empty");
  host.require_vertices(outer);
  if (!is_subset(inner, outer)) throw InputError("inner set is not contained in the outer set");
  const auto p_outer = p_value(host, kb, outer);
  const auto p_inner = p_value(host, kb, inner);
  if (p_outer.rho.is_aleph0() || p_outer.rho != Card(p_outer.s)) throw InputError("outer set is not tight");
  if (p_inner.rho.is_aleph0() || p_inner.rho != Card(p_inner.s)) throw InputError("inner set is not tight");
  if (p_outer.rho != p_inner.rho) throw InputError("outer and inner sets have different in-degrees");
  const auto l = static_cast<std::int64_t>(p_outer.rho.finite_value());
  if (l < 1) throw InputError("in-degree of the nested sets must be at least 1");

  const auto used = used_mask(host, kb);
  const auto in_outer = host.mask(outer);
  const auto in_inner = host.mask(inner);
  std::vector<EdgeId> entering;  // residual in-edges of outer, ascending
  for (const auto& e : host.edges()) {
    if (!used[e.id.index] && !in_outer[e.tail.index] && in_outer[e.head.index]) entering.push_back(e.id);
  }

  // Paths from the branchings missing `outer` to a super-sink behind `inner`.
  KBranching missing;
  for (const auto& b : kb.branchings) {
    if (!intersects(b.vertices, outer)) missing.branchings.push_back(b);
  }
  auto aux = build_auxiliary(host, missing, *inner.begin());
  const auto sink = aux.network.add_node();
  aux.vertex_of_node.push_back(VertexId{});
  for (auto v : inner) {
    aux.network.add_arc(aux.node(v), sink, l);
    aux.origins.push_back({AuxiliaryNetwork::ArcKind::kToSink, 0, {}, 0});
  }
  aux.network.sink = sink;
  const auto flow = max_flow(aux.network);
  if (flow.value < l) throw InputError("the cut condition fails: fewer than l paths reach the inner set");

  PathSystem system{host, {}};
  std::vector<std::size_t> cursor(aux.origins.size(), 0);
  const auto arcs = aux.network.arcs();
  std::vector<char> entry_taken(entering.size(), 0);
  for (const auto& unit : flow.paths) {
    std::vector<std::size_t> residual_arcs(unit.begin() + 2, unit.end() - 1);
    std::vector<Step> steps;
    std::optional<std::size_t> label;
    VertexId start{};
    for (auto a : residual_arcs) {
      auto step = take_step(aux, a, cursor);
      const auto head = aux.vertex_of_node[arcs[a].head];
      const auto tail = aux.vertex_of_node[arcs[a].tail];
      if (!label) {
        if (in_outer[tail.index] || !in_outer[head.index]) continue;
        if (!step.edge) throw std::logic_error("a bundle enters a set of finite in-degree");
        auto it = std::find(entering.begin(), entering.end(), *step.edge);
        label = static_cast<std::size_t>(it - entering.begin());
        entry_taken[*label] = 1;
        start = head;
        if (in_inner[head.index]) break;
        continue;
      }
      steps.push_back(step);
      if (in_inner[head.index]) break;
    }
    if (!label) throw std::logic_error("a flow path never entered the outer set");
    Path path{start, realise(system.host, steps)};
    system.paths.push_back({*label, std::move(path)});
  }
  std::sort(system.paths.begin(), system.paths.end(),
            [](const SystemPath& a, const SystemPath& b) { return a.label < b.label; });

  // Endpoints must be the heads of the in-edges of `inner`, with multiplicity.
  std::vector<VertexId> ends;
  for (const auto& sp : system.paths) {
    const auto verts = path_vertices(system.host, sp.path);
    for (auto v : verts) {
      if (!in_outer[v.index]) throw std::logic_error("nested path leaves the outer set");
    }
    ends.push_back(verts.back());
  }
  std::vector<VertexId> heads;
  for (const auto& e : host.edges()) {
    if (!used[e.id.index] && !in_inner[e.tail.index] && in_inner[e.head.index]) heads.push_back(e.head);
  }
  std::sort(ends.begin(), ends.end());
  std::sort(heads.begin(), heads.end());
  if (ends != heads || std::count(entry_taken.begin(), entry_taken.end(), 1) != l) {
    throw std::logic_error("nested path system violates the endpoint law");
  }
  return system;
}

// ---------------------------------------------------------------------------

PackReport pack(const Digraph& host, const std::vector<VertexSet>& roots, const std::optional<KBranching>& initial) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].empty()) throw InputError("root set " + std::to_string(i) + " is empty");
    host.require_vertices(roots[i]);
  }
  KBranching kb;
  if (initial) {
    if (initial->size() != roots.size()) throw InputError("initial branchings do not match the root sets");
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if ((*initial)[i].roots != roots[i]) {
        throw InputError("initial branching " + std::to_string(i) + " has a different root set");
      }
    }
    if (auto bad = verify(host, *initial)) throw InputError("invalid initial branchings: " + bad->message);
    kb = *initial;
  } else {
    kb = KBranching::edgeless(roots);
  }

  PackReport report{host, std::nullopt, std::nullopt, {}};
  if (auto cert = check_condition_flow(host, kb)) {
    report.certificate = std::move(cert);
    return report;
  }

  std::size_t step = 0;
  for (auto v : host.vertices()) {
    for (std::size_t j = 0; j < kb.size(); ++j) {
      if (kb[j].vertices.contains(v)) continue;
      auto ext = extend_toward(report.host, kb, j, v);
      report.host = std::move(ext.host);
      kb = std::move(ext.kb);
      report.trace.push_back({step, v, j, std::move(ext.added)});
    }
    ++step;
  }

  if (auto bad = verify(report.host, kb)) throw std::logic_error("packing failed verification: " + bad->message);
  for (const auto& b : kb.branchings) {
    if (b.vertices != report.host.vertices()) throw std::logic_error("packing is not spanning");
  }
  report.packing = std::move(kb);
  return report;
}

}  // namespace branchpack

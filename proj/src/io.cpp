#include "branchpack/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "branchpack/errors.hpp"

namespace branchpack::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

const std::string& as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

Json edge_json(const Digraph& g, const Edge& e) {
  return Json{{"id", g.edge_name(e.id)}, {"tail", g.vertex_name(e.tail)}, {"head", g.vertex_name(e.head)}};
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json card_to_json(Card c) {
  if (c.is_aleph0()) return "aleph0";
  return c.finite_value();
}

Card card_from_json(const Json& j) {
  if (j.is_string() && j.get_ref<const std::string&>() == "aleph0") return Card::aleph0();
  if (j.is_number_unsigned()) return Card(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Card(j.get<std::uint64_t>());
  throw InputError("a cardinal must be a nonnegative integer or \"aleph0\"");
}

Json vertex_set_to_json(const Digraph& g, const VertexSet& x) {
  Json out = Json::array();
  for (auto v : x) out.push_back(g.vertex_name(v));
  return out;
}

VertexSet vertex_set_from_json(const Digraph& g, const Json& j) {
  std::vector<VertexId> ids;
  for (const auto& v : as_array(j, "vertex set")) ids.push_back(g.vertex(as_string(v, "vertex id")));
  return VertexSet(std::move(ids));
}

Json graph_to_json(const Digraph& g) {
  Json out;
  out["vertices"] = vertex_set_to_json(g, g.vertices());
  out["edges"] = Json::array();
  for (const auto& e : g.edges()) out["edges"].push_back(edge_json(g, e));
  out["bundles"] = Json::array();
  for (const auto& b : g.bundles()) {
    out["bundles"].push_back(
        Json{{"tail", g.vertex_name(b.tail)}, {"head", g.vertex_name(b.head)}, {"mult", "aleph0"}});
  }
  return out;
}

Digraph graph_from_json(const Json& j) {
  DigraphBuilder b;
  for (const auto& v : as_array(field(j, "vertices"), "'vertices'")) b.add_vertex(as_string(v, "vertex id"));
  if (j.contains("edges")) {
    for (const auto& e : as_array(j["edges"], "'edges'")) {
      b.add_edge(as_string(field(e, "id"), "edge id"), as_string(field(e, "tail"), "edge tail"),
                 as_string(field(e, "head"), "edge head"));
    }
  }
  if (j.contains("bundles")) {
    for (const auto& bu : as_array(j["bundles"], "'bundles'")) {
      if (bu.contains("mult") && card_from_json(bu["mult"]).is_finite()) {
        throw InputError("bundle multiplicity must be aleph0; list finite parallels as edges");
      }
      b.add_bundle(as_string(field(bu, "tail"), "bundle tail"), as_string(field(bu, "head"), "bundle head"));
    }
  }
  return std::move(b).build();
}

Json branching_to_json(const Digraph& g, const Branching& b) {
  Json edges = Json::array();
  for (auto e : b.edges) edges.push_back(g.edge_name(e));
  return Json{{"roots", vertex_set_to_json(g, b.roots)}, {"edges", std::move(edges)}};
}

Branching branching_from_json(const Digraph& g, const Json& j) {
  Branching b;
  b.roots = vertex_set_from_json(g, field(j, "roots"));
  b.vertices = b.roots;
  if (j.contains("edges")) {
    for (const auto& e : as_array(j["edges"], "'edges'")) {
      const auto id = g.edge_by_name(as_string(e, "edge id"));
      const auto edge = g.edge(id);
      b.edges.push_back(id);
      b.vertices.insert(edge.tail);
      b.vertices.insert(edge.head);
    }
  }
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

Json instance_to_json(const Instance& inst) {
  Json out = graph_to_json(inst.graph);
  out["roots"] = Json::array();
  for (const auto& r : inst.roots) out["roots"].push_back(vertex_set_to_json(inst.graph, r));
  if (inst.initial) {
    const bool any_edges = std::any_of(inst.initial->branchings.begin(), inst.initial->branchings.end(),
                                       [](const Branching& b) { return !b.edges.empty(); });
    if (any_edges) {
      out["branchings"] = Json::array();
      for (const auto& b : inst.initial->branchings) out["branchings"].push_back(branching_to_json(inst.graph, b));
    }
  }
  return out;
}

Instance instance_from_json(const Json& j) {
  Instance inst{graph_from_json(j), {}, std::nullopt};
  if (j.contains("branchings")) {
    KBranching kb;
    for (const auto& b : as_array(j["branchings"], "'branchings'")) {
      kb.branchings.push_back(branching_from_json(inst.graph, b));
    }
    inst.initial = std::move(kb);
  }
  if (j.contains("roots")) {
    for (const auto& r : as_array(j["roots"], "'roots'")) inst.roots.push_back(vertex_set_from_json(inst.graph, r));
  } else if (inst.initial) {
    for (const auto& b : inst.initial->branchings) inst.roots.push_back(b.roots);
  } else {
    throw InputError("instance needs 'roots' or 'branchings'");
  }
  return inst;
}

Json certificate_to_json(const Digraph& g, const CutCertificate& c) {
  return Json{{"X", vertex_set_to_json(g, c.vertices)}, {"rho", card_to_json(c.rho)}, {"s", c.s}};
}

CutCertificate certificate_from_json(const Digraph& g, const Json& j) {
  CutCertificate c;
  c.vertices = vertex_set_from_json(g, field(j, "X"));
  c.rho = card_from_json(field(j, "rho"));
  const auto& s = field(j, "s");
  if (!s.is_number_integer() || s.get<std::int64_t>() < 0) throw InputError("'s' must be a nonnegative integer");
  c.s = s.get<std::uint32_t>();
  return c;
}

Json drawn_edges_to_json(const Digraph& original, const Digraph& grown) {
  Json out = Json::array();
  for (std::uint32_t i = static_cast<std::uint32_t>(original.edge_universe()); i < grown.edge_universe(); ++i) {
    const EdgeId id{i};
    if (grown.has_edge(id)) out.push_back(edge_json(grown, grown.edge(id)));
  }
  return out;
}

Digraph replay_drawn_edges(const Digraph& original, const Json& drawn) {
  Digraph g = original;
  for (const auto& entry : as_array(drawn, "'materialized'")) {
    const auto tail = g.vertex(as_string(field(entry, "tail"), "tail"));
    const auto head = g.vertex(as_string(field(entry, "head"), "head"));
    const auto& id = as_string(field(entry, "id"), "edge id");
    if (!g.find_bundle(tail, head)) throw InputError("edge '" + id + "' is not drawn from any bundle");
    auto m = materialize(g, Bundle{tail, head}, 1);
    if (m.graph.edge_name(m.new_edges.front()) != id) {
      throw InputError("drawn edge '" + id + "' does not match the next draw from its bundle");
    }
    g = std::move(m.graph);
  }
  return g;
}

Json pack_report_to_json(const Digraph& original, const PackReport& report) {
  const Digraph& g = report.host;
  Json out;
  out["outcome"] = report.packed() ? "packed" : "infeasible";
  if (report.packing) {
    out["branchings"] = Json::array();
    for (const auto& b : report.packing->branchings) out["branchings"].push_back(branching_to_json(g, b));
  } else {
    out["branchings"] = nullptr;
  }
  out["certificate"] = report.certificate ? certificate_to_json(g, *report.certificate) : Json(nullptr);
  out["trace"] = Json::array();
  for (const auto& t : report.trace) {
    Json path = Json::array();
    for (auto e : t.path) path.push_back(g.edge_name(e));
    out["trace"].push_back(Json{
        {"step", t.step}, {"vertex", g.vertex_name(t.vertex)}, {"branching", t.branching}, {"path", std::move(path)}});
  }
  out["materialized"] = drawn_edges_to_json(original, g);
  return out;
}

Json path_system_to_json(const Digraph& original, const PathSystem& system, std::optional<VertexId> target) {
  const Digraph& g = system.host;
  Json out;
  out["outcome"] = "paths";
  out["target"] = target ? Json(g.vertex_name(*target)) : Json(nullptr);
  out["paths"] = Json::array();
  for (const auto& sp : system.paths) {
    Json edges = Json::array();
    for (auto e : sp.path.edges) edges.push_back(g.edge_name(e));
    const auto verts = path_vertices(g, sp.path);
    out["paths"].push_back(Json{{"label", sp.label},
                                {"start", g.vertex_name(sp.path.start)},
                                {"end", g.vertex_name(verts.back())},
                                {"edges", std::move(edges)}});
  }
  out["materialized"] = drawn_edges_to_json(original, g);
  return out;
}

std::string to_dot(const Digraph& g, const KBranching* kb) {
  static constexpr std::array<const char*, 8> kColors = {"red",    "blue",   "darkgreen", "orange",
                                                         "purple", "brown",  "magenta",   "cyan"};
  std::vector<int> owner(g.edge_universe(), -1);
  if (kb) {
    for (std::size_t i = 0; i < kb->size(); ++i) {
      for (auto e : (*kb)[i].edges) owner[e.index] = static_cast<int>(i);
    }
  }
  std::ostringstream out;
  out << "digraph D {\n";
  for (auto v : g.vertices()) out << "  " << quoted(g.vertex_name(v)) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << quoted(g.vertex_name(e.tail)) << " -> " << quoted(g.vertex_name(e.head)) << " [label="
        << quoted(g.edge_name(e.id));
    if (owner[e.id.index] >= 0) {
      out << ", color=" << kColors[static_cast<std::size_t>(owner[e.id.index]) % kColors.size()]
          << ", xlabel=" << quoted("B" + std::to_string(owner[e.id.index]));
    }
    out << "];\n";
  }
  for (const auto& b : g.bundles()) {
    out << "  " << quoted(g.vertex_name(b.tail)) << " -> " << quoted(g.vertex_name(b.head))
        << " [label=\"ℵ0\", style=bold, penwidth=3];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace branchpack::io

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "branchpack/branching.hpp"
#include "branchpack/cardinal.hpp"
#include "branchpack/cuts.hpp"
#include "branchpack/digraph.hpp"
#include "branchpack/generators.hpp"
#include "branchpack/packer.hpp"

namespace branchpack::io {

using Json = nlohmann::json;

/// Parses text; syntax errors become InputError carrying the byte offset.
Json parse(std::string_view text);

Json card_to_json(Card c);
Card card_from_json(const Json& j);

Json vertex_set_to_json(const Digraph& g, const VertexSet& x);
VertexSet vertex_set_from_json(const Digraph& g, const Json& j);

/// {"vertices": [...], "edges": [{"id","tail","head"}...], "bundles": [{"tail","head","mult"}...]}
Json graph_to_json(const Digraph& g);
Digraph graph_from_json(const Json& j);

/// {"roots": [...], "edges": [...]}
Json branching_to_json(const Digraph& g, const Branching& b);
/// Vertices are the roots plus every edge endpoint.
Branching branching_from_json(const Digraph& g, const Json& j);

/// Graph document plus "roots" and optionally "branchings".
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// {"X": [...], "rho": card, "s": int}
Json certificate_to_json(const Digraph& g, const CutCertificate& c);
CutCertificate certificate_from_json(const Digraph& g, const Json& j);

/// Edges of `grown` that `original` lacks: [{"id","tail","head"}...].
Json drawn_edges_to_json(const Digraph& original, const Digraph& grown);
/// Replays bundle draws in order; each listed id must match the name the
/// draw produces.
Digraph replay_drawn_edges(const Digraph& original, const Json& drawn);

Json pack_report_to_json(const Digraph& original, const PackReport& report);
Json path_system_to_json(const Digraph& original, const PathSystem& system, std::optional<VertexId> target);

/// Graphviz rendering; bundles are bold and labeled with aleph0. Edges of
/// `kb` are colored by branching.
std::string to_dot(const Digraph& g, const KBranching* kb = nullptr);

}  // namespace branchpack::io

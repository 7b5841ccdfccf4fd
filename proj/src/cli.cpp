#include "branchpack/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "branchpack/cardinal.hpp"
#include "branchpack/cuts.hpp"
#include "branchpack/errors.hpp"
#include "branchpack/generators.hpp"
#include "branchpack/io.hpp"
#include "branchpack/packer.hpp"

namespace branchpack::cli {

namespace {

using io::Json;

std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Branchings the instance starts from, checked against its root sets.
KBranching starting_point(const Instance& inst) {
  if (!inst.initial) return KBranching::edgeless(inst.roots);
  const auto& kb = *inst.initial;
  if (kb.size() != inst.roots.size()) throw InputError("'roots' and 'branchings' differ in length");
  for (std::size_t i = 0; i < kb.size(); ++i) {
    if (kb[i].roots != inst.roots[i]) throw InputError("branching " + std::to_string(i) + " has other roots");
  }
  if (auto bad = verify(inst.graph, kb)) throw InputError("initial branchings invalid: " + bad->message);
  return kb;
}

struct Options {
  std::string input;
  std::string format = "json";
  // check
  bool oracle = false;
  std::size_t bound = kDefaultBruteForceBound;
  // paths
  std::string target;
  // gen
  std::string family;
  std::size_t n = 3;
  std::size_t k = 2;
  std::uint64_t seed = 1;
  double density = 0.3;
  std::string mode = "aleph0";
  std::size_t copies = 0;
  std::size_t l = 1;
  // certify
  std::string graph;
};

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto inst = io::instance_from_json(io::parse(read_all(o.input, in)));
  const auto kb = starting_point(inst);
  const auto cert = o.oracle ? check_condition_bruteforce(inst.graph, kb, o.bound)
                             : check_condition_flow(inst.graph, kb);
  if (!cert) {
    emit(out, Json{{"outcome", "ok"}});
    return kExitOk;
  }
  err << "cut condition violated\n";
  emit(out, Json{{"outcome", "violated"}, {"certificate", io::certificate_to_json(inst.graph, *cert)}});
  return kExitNegative;
}

int cmd_pack(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto inst = io::instance_from_json(io::parse(read_all(o.input, in)));
  starting_point(inst);
  const auto report = pack(inst.graph, inst.roots, inst.initial);
  if (o.format == "dot") {
    out << io::to_dot(report.host, report.packing ? &*report.packing : nullptr);
  } else {
    emit(out, io::pack_report_to_json(inst.graph, report));
  }
  if (!report.packed()) {
    err << "no packing exists; see certificate\n";
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_paths(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto inst = io::instance_from_json(io::parse(read_all(o.input, in)));
  const auto kb = starting_point(inst);
  const auto w = inst.graph.vertex(o.target);
  auto result = path_system_to(inst.graph, kb, w);
  if (auto* cert = std::get_if<CutCertificate>(&result)) {
    err << "fewer than k disjoint paths reach '" << o.target << "'\n";
    emit(out, Json{{"outcome", "violated"}, {"certificate", io::certificate_to_json(inst.graph, *cert)}});
    return kExitNegative;
  }
  emit(out, io::path_system_to_json(inst.graph, std::get<PathSystem>(result), w));
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  Json header{{"family", o.family}};
  Instance inst;
  if (o.family == "counterexample") {
    if (o.mode != "aleph0" && o.mode != "finite") throw InputError("--mode must be aleph0 or finite");
    const bool finite = o.mode == "finite";
    const std::size_t c = o.copies == 0 ? o.n : o.copies;
    inst = counterexample(o.n, finite ? Multiplicity::finite(c) : Multiplicity::infinite());
    header["n"] = o.n;
    header["mode"] = o.mode;
    if (finite) header["c"] = c;
  } else if (o.family == "random") {
    auto r = random_instance(o.n, o.k, o.seed, o.density);
    inst = std::move(r.instance);
    header["n"] = o.n;
    header["k"] = o.k;
    header["seed"] = o.seed;
    header["density"] = o.density;
    header["rng"] = kRandomAlgorithm;
    header["feasible"] = r.feasible;
  } else if (o.family == "nested") {
    auto fx = nested_tight_fixture(o.l);
    std::vector<VertexSet> roots;
    for (const auto& b : fx.kb.branchings) roots.push_back(b.roots);
    header["l"] = o.l;
    header["outer"] = io::vertex_set_to_json(fx.graph, fx.outer);
    header["inner"] = io::vertex_set_to_json(fx.graph, fx.inner);
    inst = Instance{std::move(fx.graph), std::move(roots), std::nullopt};
  } else {
    throw InputError("unknown family '" + o.family + "'");
  }
  if (o.format == "dot") {
    out << io::to_dot(inst.graph);
    return kExitOk;
  }
  auto doc = io::instance_to_json(inst);
  doc["generator"] = std::move(header);
  emit(out, doc);
  return kExitOk;
}

int invalid(std::ostream& out, std::ostream& err, const std::string& reason) {
  err << reason << "\n";
  emit(out, Json{{"outcome", "invalid"}, {"reason", reason}});
  return kExitNegative;
}

int certify_packing(const Instance& inst, const Json& doc, std::ostream& out, std::ostream& err) {
  const Digraph grown = io::replay_drawn_edges(inst.graph, doc.value("materialized", Json::array()));
  const auto& list = doc.at("branchings");
  if (!list.is_array()) throw InputError("'branchings' must be an array");
  KBranching kb;
  for (const auto& b : list) kb.branchings.push_back(io::branching_from_json(grown, b));
  if (kb.size() != inst.roots.size()) return invalid(out, err, "packing has the wrong number of branchings");
  if (auto bad = verify(grown, kb)) return invalid(out, err, bad->message);
  for (std::size_t i = 0; i < kb.size(); ++i) {
    if (kb[i].roots != inst.roots[i]) {
      return invalid(out, err, "branching " + std::to_string(i) + " has the wrong root set");
    }
    if (kb[i].vertices != grown.vertices()) {
      return invalid(out, err, "branching " + std::to_string(i) + " is not spanning");
    }
    if (inst.initial) {
      for (auto e : (*inst.initial)[i].edges) {
        if (!std::binary_search(kb[i].edges.begin(), kb[i].edges.end(), e)) {
          return invalid(out, err, "branching " + std::to_string(i) + " drops initial edge '" +
                                       inst.graph.edge_name(e) + "'");
        }
      }
    }
  }
  emit(out, Json{{"outcome", "valid"}, {"kind", "packing"}});
  return kExitOk;
}

int certify_certificate(const Instance& inst, const Json& cert_doc, std::ostream& out, std::ostream& err) {
  const auto kb = starting_point(inst);
  const auto cert = io::certificate_from_json(inst.graph, cert_doc);
  if (cert.vertices.empty()) return invalid(out, err, "certificate set is empty");
  const auto p = p_value(inst.graph, kb, cert.vertices);
  if (p.rho != cert.rho || p.s != cert.s) {
    return invalid(out, err,
                   "certificate values disagree with the graph: rho=" + p.rho.to_string() + " s=" + std::to_string(p.s));
  }
  if (!p.deficit()) return invalid(out, err, "certificate set satisfies the cut condition");
  emit(out, Json{{"outcome", "valid"}, {"kind", "certificate"}});
  return kExitOk;
}

int cmd_certify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto doc = io::parse(read_all(o.input, in));
  if (o.graph == "-") throw InputError("--graph must name a file");
  const auto inst = io::instance_from_json(io::parse(read_all(o.graph, in)));
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  if (doc.contains("branchings") && doc["branchings"].is_array()) return certify_packing(inst, doc, out, err);
  if (doc.contains("certificate") && doc["certificate"].is_object()) {
    return certify_certificate(inst, doc["certificate"], out, err);
  }
  if (doc.contains("X")) return certify_certificate(inst, doc, out, err);
  throw InputError("document holds neither a packing nor a certificate");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pack edge-disjoint spanning branchings with prescribed root sets", "branchpack"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Decide the cut condition; print ok or a certificate");
  check->add_option("input", o.input, "Instance JSON (stdin when omitted)");
  check->add_flag("--oracle", o.oracle, "Use subset enumeration instead of max flow");
  check->add_option("--bound", o.bound, "Vertex limit for --oracle")->capture_default_str();

  auto* pk = app.add_subcommand("pack", "Pack spanning branchings or print a certificate");
  pk->add_option("input", o.input, "Instance JSON (stdin when omitted)");
  pk->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* paths = app.add_subcommand("paths", "Disjoint paths from every root set to one vertex");
  paths->add_option("input", o.input, "Instance JSON (stdin when omitted)");
  paths->add_option("--to", o.target, "Target vertex")->required();

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", o.family, "counterexample, random or nested")
      ->required()
      ->check(CLI::IsMember({"counterexample", "random", "nested"}));
  gen->add_option("--n", o.n, "Vertex count or truncation depth")->capture_default_str();
  gen->add_option("--k", o.k, "Number of root sets (random)")->capture_default_str();
  gen->add_option("--seed", o.seed, "PRNG seed (random)")->capture_default_str();
  gen->add_option("--density", o.density, "Edge probability per trial (random)")->capture_default_str();
  gen->add_option("--mode", o.mode, "aleph0 or finite (counterexample)")
      ->check(CLI::IsMember({"aleph0", "finite"}))
      ->capture_default_str();
  gen->add_option("--c", o.copies, "Parallel copies in finite mode (default n)");
  gen->add_option("--l", o.l, "In-degree of the nested tight sets")->capture_default_str();
  gen->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* certify = app.add_subcommand("certify", "Re-validate a packing or certificate against an instance");
  certify->add_option("input", o.input, "Document to validate (stdin when omitted)");
  certify->add_option("--graph", o.graph, "Instance JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(o, in, out, err);
    if (pk->parsed()) return cmd_pack(o, in, out, err);
    if (paths->parsed()) return cmd_paths(o, in, out, err);
    if (gen->parsed()) return cmd_gen(o, out);
    return cmd_certify(o, in, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CardUnderflow& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace branchpack::cli

#include "branchpack/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "branchpack/cuts.hpp"
#include "branchpack/errors.hpp"

namespace branchpack {

namespace {

void add_multi(DigraphBuilder& g, const std::string& tail, const std::string& head, Multiplicity mode) {
  if (mode.aleph0) {
    g.add_bundle(tail, head);
    return;
  }
  for (std::size_t m = 0; m < mode.copies; ++m) {
    g.add_edge(tail + "->" + head + "#" + std::to_string(m), tail, head);
  }
}

// Uniform double in [0, 1) from the top 53 bits of one output.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Instance counterexample(std::size_t n, Multiplicity mode) {
  if (n == 0) throw InputError("counterexample needs n >= 1");
  DigraphBuilder g;
  for (std::size_t i = 0; i <= n; ++i) g.add_vertex("r" + std::to_string(i));
  g.add_vertex("v");
  for (std::size_t i = 1; i <= n; ++i) add_multi(g, "r0", "r" + std::to_string(i), mode);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto r = "r" + std::to_string(i);
    g.add_edge(r + "->v", r, "v");
  }
  add_multi(g, "v", "r0", mode);
  add_multi(g, "r0", "v", mode);

  Instance out{std::move(g).build(), {}, std::nullopt};
  for (std::size_t i = 0; i <= n; ++i) out.roots.push_back(VertexSet{out.graph.vertex("r" + std::to_string(i))});
  out.initial = KBranching::edgeless(out.roots);
  return out;
}

RandomInstance random_instance(std::size_t n, std::size_t k, std::uint64_t seed, double density) {
  if (n == 0 || n > 10000) throw InputError("random_instance needs 1 <= n <= 10000");
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  DigraphBuilder g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  const std::size_t trials = k == 0 ? 1 : k;
  std::size_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      for (std::size_t t = 0; t < trials; ++t) {
        if (unit(rng) < density) {
          g.add_edge("e" + std::to_string(count++), VertexId{static_cast<std::uint32_t>(a)},
                     VertexId{static_cast<std::uint32_t>(b)});
        }
      }
    }
  }
  std::vector<VertexSet> roots;
  for (std::size_t i = 0; i < k; ++i) {
    const auto first = static_cast<std::uint32_t>(rng() % n);
    VertexSet r{VertexId{first}};
    for (std::uint32_t v = 0; v < n; ++v) {
      if (v != first && unit(rng) < 0.15) r.insert(VertexId{v});
    }
    roots.push_back(std::move(r));
  }
  RandomInstance out{{std::move(g).build(), std::move(roots), std::nullopt}, false};
  out.feasible = !check_condition_flow(out.instance.graph, KBranching::edgeless(out.instance.roots));
  return out;
}

NestedFixture nested_tight_fixture(std::size_t l) {
  if (l < 1 || l > 8) throw InputError("nested_tight_fixture needs 1 <= l <= 8");
  DigraphBuilder g;
  std::vector<std::string> outer_names{"c"};
  std::vector<std::string> inner_names{"c"};
  g.add_vertex("c");
  for (std::size_t j = 1; j <= l; ++j) g.add_vertex("o" + std::to_string(j));

  auto inner_vertex = [&](const std::string& name) {
    g.add_vertex(name);
    outer_names.push_back(name);
    inner_names.push_back(name);
  };
  auto outer_vertex = [&](const std::string& name) {
    g.add_vertex(name);
    outer_names.push_back(name);
  };

  const bool shared = l >= 4;
  for (std::size_t j = 1; j <= l; ++j) {
    const auto js = std::to_string(j);
    const auto o = "o" + js;
    const auto t = "t" + js;
    if (j == l && l >= 2) {
      // Zero-length path: the in-edge lands in the inner set.
      inner_vertex(t);
      g.add_edge(o + "->" + t, o, t);
    } else if (shared && (j == 2 || j == 3)) {
      // Two in-edges share the head s2, which then forks.
      if (j == 2) outer_vertex("s2");
      const auto m = "m" + js;
      outer_vertex(m);
      inner_vertex(t);
      g.add_edge(o + "->s2", o, "s2");
      g.add_edge("s2->" + m, "s2", m);
      g.add_edge(m + "->" + t, m, t);
    } else {
      const auto s = "s" + js;
      outer_vertex(s);
      inner_vertex(t);
      g.add_edge(o + "->" + s, o, s);
      g.add_edge(s + "->" + t, s, t);
    }
  }

  // Bundles keep every other set well above its demand without touching the
  // in-degrees of the two nested sets.
  std::vector<std::pair<std::string, std::string>> bundles;
  auto bundle = [&](const std::string& a, const std::string& b) {
    for (const auto& [x, y] : bundles) {
      if (x == a && y == b) return;
    }
    bundles.emplace_back(a, b);
    g.add_bundle(a, b);
  };
  for (std::size_t j = 1; j <= l; ++j) bundle("c", "o" + std::to_string(j));
  for (const auto& v : outer_names) {
    if (v != "c") bundle("c", v);
  }
  for (const auto& a : inner_names) {
    for (const auto& b : inner_names) {
      if (a != b) bundle(a, b);
    }
  }

  NestedFixture fx;
  fx.l = l;
  fx.graph = std::move(g).build();
  std::vector<VertexSet> roots{VertexSet{fx.graph.vertex("c")}};
  for (std::size_t j = 1; j <= l; ++j) roots.push_back(VertexSet{fx.graph.vertex("o" + std::to_string(j))});
  fx.kb = KBranching::edgeless(roots);
  for (const auto& v : outer_names) fx.outer.insert(fx.graph.vertex(v));
  for (const auto& v : inner_names) fx.inner.insert(fx.graph.vertex(v));

  if (!status(fx.graph, fx.kb, fx.outer, 0).tight || !status(fx.graph, fx.kb, fx.inner, 0).tight ||
      check_condition_flow(fx.graph, fx.kb)) {
    throw std::logic_error("nested fixture failed its self-check");
  }
  return fx;
}

}  // namespace branchpack

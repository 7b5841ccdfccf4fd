#include "branchpack/cuts.hpp"
#include "branchpack/errors.hpp"
#include "branchpack/generators.hpp"
#include "branchpack/io.hpp"
#include "branchpack/packer.hpp"
#include "doctest.h"
#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

using namespace branchpack;
using fixtures::vs;

TEST_CASE("counterexample shape") {
  const auto ce = counterexample(3, Multiplicity::infinite());
  CHECK(ce.graph.vertex_count() == 5);
  CHECK(ce.roots.size() == 4);
  CHECK(ce.graph.edge_count() == 3);
  for (int i = 1; i <= 3; ++i) {
    const auto r = ce.graph.vertex("r" + std::to_string(i));
    CHECK(ce.graph.find_bundle(ce.graph.vertex("r0"), r));
    CHECK(ce.graph.find_edge("r" + std::to_string(i) + "->v"));
  }
  CHECK(ce.graph.find_bundle(ce.graph.vertex("v"), ce.graph.vertex("r0")));
  REQUIRE(ce.initial);
  for (const auto& b : ce.initial->branchings) CHECK(b.edges.empty());
  CHECK_THROWS_AS(counterexample(0, Multiplicity::infinite()), InputError);

  const auto fin = counterexample(3, Multiplicity::finite(3));
  CHECK(fin.graph.bundles().empty());
  CHECK(fin.graph.edge_count() == 3 + 3 * 3 + 3 + 3);
}

TEST_CASE("counterexample satisfies the condition with the expected tight set") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ce = counterexample(n, Multiplicity::infinite());
    CHECK_FALSE(check_condition_bruteforce(ce.graph, *ce.initial));
    const auto st = status(ce.graph, *ce.initial, vs(ce.graph, {"r0", "v"}), 0);
    CHECK(st.tight);
    CHECK(st.p.rho == Card(n));
    CHECK(st.p.s == n);
  }
}

TEST_CASE("finite counterexample: c = n suffices and c = n - 1 does not") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ok = counterexample(n, Multiplicity::finite(n));
    CHECK_FALSE(check_condition_bruteforce(ok.graph, *ok.initial));
    CHECK_FALSE(oracle::any_violation(ok.graph, *ok.initial));
    if (n >= 2) {
      const auto low = counterexample(n, Multiplicity::finite(n - 1));
      CHECK(check_condition_bruteforce(low.graph, *low.initial));
      CHECK(oracle::any_violation(low.graph, *low.initial));
    }
  }
}

TEST_CASE("counterexample n = 2 packs, confirmed by the oracle") {
  const auto ce = counterexample(2, Multiplicity::infinite());
  const auto r = pack(ce.graph, ce.roots, ce.initial);
  REQUIRE(r.packing);
  CHECK(r.packing->size() == 3);
  CHECK_FALSE(verify(r.host, *r.packing));
  CHECK(oracle::packable(oracle::raw_from(ce.graph), oracle::masks_from(ce.graph, ce.roots)));
}

TEST_CASE("random_instance is deterministic") {
  const auto a = random_instance(7, 3, 99, 0.3);
  const auto b = random_instance(7, 3, 99, 0.3);
  CHECK(io::instance_to_json(a.instance).dump() == io::instance_to_json(b.instance).dump());
  CHECK(a.feasible == b.feasible);
  const auto c = random_instance(7, 3, 100, 0.3);
  CHECK(io::instance_to_json(a.instance).dump() != io::instance_to_json(c.instance).dump());
  CHECK_THROWS_AS(random_instance(0, 1, 1, 0.5), InputError);
  CHECK_THROWS_AS(random_instance(3, 1, 1, 1.5), InputError);
}

TEST_CASE("random_instance complete graph is feasible for one root") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = random_instance(6, 1, seed, 1.0);
    CHECK(r.instance.graph.edge_count() == 30);
    CHECK(r.feasible);
    // The prescribed single root {v0}.
    const std::vector<VertexSet> v0{vs(r.instance.graph, {"v0"})};
    CHECK_FALSE(check_condition_flow(r.instance.graph, KBranching::edgeless(v0)));
  }
}

TEST_CASE("random_instance labels agree with brute force and both occur") {
  int feasible = 0;
  int infeasible = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = random_instance(5, 2, seed, 0.3);
    const bool brute = !check_condition_bruteforce(r.instance.graph, KBranching::edgeless(r.instance.roots));
    CHECK(brute == r.feasible);
    (r.feasible ? feasible : infeasible)++;
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("nested fixtures are tight with common in-degree") {
  for (std::size_t l = 1; l <= 8; ++l) {
    const auto fx = nested_tight_fixture(l);
    CHECK(fx.l == l);
    CHECK(is_subset(fx.inner, fx.outer));
    const auto po = status(fx.graph, fx.kb, fx.outer, 0);
    const auto pi = status(fx.graph, fx.kb, fx.inner, 0);
    CHECK(po.tight);
    CHECK(pi.tight);
    CHECK(po.p.rho == Card(l));
    CHECK(pi.p.rho == Card(l));
  }
  CHECK_THROWS_AS(nested_tight_fixture(0), InputError);
  CHECK_THROWS_AS(nested_tight_fixture(9), InputError);
}

TEST_CASE("nested fixture l = 4 has two in-edges sharing a head") {
  const auto fx = nested_tight_fixture(4);
  int into_s2 = 0;
  for (const auto& e : fx.graph.edges()) {
    if (!fx.outer.contains(e.tail) && fx.outer.contains(e.head) && fx.graph.vertex_name(e.head) == "s2") ++into_s2;
  }
  CHECK(into_s2 == 2);
}

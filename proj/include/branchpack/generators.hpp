#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "branchpack/branching.hpp"
#include "branchpack/digraph.hpp"

namespace branchpack {

struct Instance {
  Digraph graph;
  std::vector<VertexSet> roots;
  std::optional<KBranching> initial;
};

/// How the infinite bundles of the counterexample are rendered.
struct Multiplicity {
  bool aleph0 = true;
  std::size_t copies = 0;  // explicit parallels when !aleph0

  static Multiplicity infinite() { return {true, 0}; }
  static Multiplicity finite(std::size_t c) { return {false, c}; }
};

/// Finite truncation of the infinite counterexample: roots r0..rn and v,
/// bundles r0 -> ri and v -> r0, single edges ri -> v, and one root set
/// {ri} per i. The omitted roots r_{n+1}, r_{n+2}, ... are contracted into
/// r0, which turns their edges into v into a bundle r0 -> v. In finite mode
/// every bundle becomes `copies` parallel edges.
Instance counterexample(std::size_t n, Multiplicity mode);

/// Identifier of the PRNG behind random_instance. Values are derived from
/// its raw 64-bit outputs only (no std distributions), so instances are
/// identical across standard libraries.
inline constexpr std::string_view kRandomAlgorithm = "mt19937_64";

struct RandomInstance {
  Instance instance;
  bool feasible = false;
};

/// Vertices v0..v{n-1}. For every ordered pair (a, b), a != b, max(k, 1)
/// independent trials each add an edge a -> b with probability `density`.
/// Root set i holds one uniformly drawn vertex plus each other vertex with
/// probability 0.15. Labeled by the flow check on edgeless branchings.
RandomInstance random_instance(std::size_t n, std::size_t k, std::uint64_t seed, double density);

/// Tight sets inner c outer with common in-degree l, over edgeless
/// branchings with roots {c}, {o1}, ..., {ol}.
struct NestedFixture {
  Digraph graph;
  KBranching kb;
  VertexSet outer;
  VertexSet inner;
  std::size_t l = 0;
};

/// 1 <= l <= 8. For l >= 4 two in-edges of the outer set share their head,
/// and for l >= 2 the last in-edge lands directly in the inner set.
NestedFixture nested_tight_fixture(std::size_t l);

}  // namespace branchpack

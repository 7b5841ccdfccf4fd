#include <algorithm>
#include <limits>
#include <set>

#include "branchpack/errors.hpp"
#include "branchpack/maxflow.hpp"
#include "doctest.h"
#include "../support/fixtures.hpp"

using namespace branchpack;

namespace {

// Capacity of the cut whose source side is the node mask `side`.
std::int64_t cut_capacity(const FlowNetwork& net, std::uint32_t side) {
  std::int64_t c = 0;
  for (const auto& a : net.arcs()) {
    if ((side >> a.tail & 1u) && !(side >> a.head & 1u)) c += a.capacity;
  }
  return c;
}

std::vector<std::uint32_t> minimum_cuts(const FlowNetwork& net, std::int64_t* best) {
  const auto n = static_cast<std::uint32_t>(net.node_count());
  *best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::uint32_t> sides;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!(m >> net.source & 1u) || (m >> net.sink & 1u)) continue;
    const auto c = cut_capacity(net, m);
    if (c < *best) {
      *best = c;
      sides.clear();
    }
    if (c == *best) sides.push_back(m);
  }
  return sides;
}

std::uint32_t mask(const std::vector<std::uint32_t>& nodes) {
  std::uint32_t m = 0;
  for (auto v : nodes) m |= 1u << v;
  return m;
}

FlowNetwork random_network(fixtures::Gen& gen, std::uint32_t n) {
  FlowNetwork net(n);
  const auto arcs = gen.below(3 * n);
  for (std::uint64_t i = 0; i < arcs; ++i) {
    const auto t = static_cast<std::uint32_t>(gen.below(n));
    const auto h = static_cast<std::uint32_t>(gen.below(n));
    if (t != h) net.add_arc(t, h, static_cast<std::int64_t>(gen.below(4)));
  }
  net.source = 0;
  net.sink = n - 1;
  return net;
}

void check_paths(const FlowNetwork& net, const FlowResult& r) {
  CHECK(r.paths.size() == static_cast<std::size_t>(r.value));
  std::vector<std::int64_t> load(net.arcs().size(), 0);
  for (const auto& p : r.paths) {
    REQUIRE_FALSE(p.empty());
    std::set<std::uint32_t> seen{net.source};
    std::uint32_t at = net.source;
    for (auto a : p) {
      CHECK(net.arcs()[a].tail == at);
      at = net.arcs()[a].head;
      CHECK(seen.insert(at).second);
      ++load[a];
    }
    CHECK(at == net.sink);
  }
  for (std::size_t a = 0; a < load.size(); ++a) CHECK(load[a] <= net.arcs()[a].capacity);
}

}  // namespace

TEST_CASE("max_flow examples") {
  FlowNetwork single(2);
  single.add_arc(0, 1, 3);
  single.source = 0;
  single.sink = 1;
  CHECK(max_flow(single).value == 3);

  // Two unit arcs separate {0,1,2} from {3,4,5}.
  FlowNetwork two(6);
  two.add_arc(0, 1, 5);
  two.add_arc(0, 2, 5);
  two.add_arc(1, 2, 5);
  two.add_arc(1, 3, 1);
  two.add_arc(2, 4, 1);
  two.add_arc(3, 5, 5);
  two.add_arc(4, 5, 5);
  two.add_arc(3, 4, 5);
  two.source = 0;
  two.sink = 5;
  const auto r = max_flow(two);
  CHECK(r.value == 2);
  check_paths(two, r);

  FlowNetwork apart(4);
  apart.add_arc(0, 1, 1);
  apart.add_arc(2, 3, 1);
  apart.source = 0;
  apart.sink = 3;
  const auto d = max_flow(apart);
  CHECK(d.value == 0);
  CHECK(d.source_side_min == std::vector<std::uint32_t>{0, 1});
  CHECK(d.paths.empty());

  FlowNetwork bad(2);
  bad.source = bad.sink = 1;
  CHECK_THROWS_AS(max_flow(bad), InputError);
}

TEST_CASE("flow value equals brute-force min cut and both cuts are minimum") {
  fixtures::Gen gen(21);
  for (int round = 0; round < 400; ++round) {
    const auto n = static_cast<std::uint32_t>(2 + gen.below(7));
    const auto net = random_network(gen, n);
    const auto r = max_flow(net);
    std::int64_t best = 0;
    minimum_cuts(net, &best);
    CHECK(r.value == best);
    check_paths(net, r);
    const auto src = mask(r.source_side_min);
    const auto sink_side = mask(r.sink_side_min);
    CHECK((src >> net.source & 1u));
    CHECK_FALSE((src >> net.sink & 1u));
    CHECK((sink_side >> net.sink & 1u));
    CHECK(cut_capacity(net, src) == r.value);
    const std::uint32_t all = (1u << n) - 1;
    CHECK(cut_capacity(net, all & ~sink_side) == r.value);
  }
}

TEST_CASE("sink side is contained in every minimum cut's sink side") {
  fixtures::Gen gen(22);
  for (int round = 0; round < 400; ++round) {
    const auto n = static_cast<std::uint32_t>(2 + gen.below(5));
    const auto net = random_network(gen, n);
    const auto r = max_flow(net);
    std::int64_t best = 0;
    const auto sides = minimum_cuts(net, &best);
    const std::uint32_t all = (1u << n) - 1;
    const auto sink_side = mask(r.sink_side_min);
    const auto src = mask(r.source_side_min);
    for (auto side : sides) {
      CHECK((sink_side & ~(all & ~side)) == 0);
      CHECK((src & ~side) == 0);
    }
  }
}

TEST_CASE("max_flow is deterministic") {
  fixtures::Gen gen(23);
  for (int round = 0; round < 50; ++round) {
    const auto net = random_network(gen, 7);
    const auto a = max_flow(net);
    const auto b = max_flow(net);
    CHECK(a.paths == b.paths);
    CHECK(a.arc_flow == b.arc_flow);
    CHECK(a.sink_side_min == b.sink_side_min);
  }
}

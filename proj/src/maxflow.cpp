#include "branchpack/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "branchpack/errors.hpp"

namespace branchpack {

std::size_t FlowNetwork::add_arc(std::uint32_t tail, std::uint32_t head, std::int64_t capacity) {
  if (tail >= node_count_ || head >= node_count_) throw InputError("flow arc endpoint out of range");
  if (capacity < 0) throw InputError("negative flow capacity");
  arcs_.push_back({tail, head, capacity});
  return arcs_.size() - 1;
}

namespace {

// Residual arc 2i is arc i forward, 2i+1 its reverse.
struct Residual {
  std::vector<std::int64_t> cap;
  std::vector<std::uint32_t> to;
  std::vector<std::vector<std::uint32_t>> adj;
};

Residual make_residual(const FlowNetwork& net) {
  Residual r;
  const auto arcs = net.arcs();
  r.cap.resize(2 * arcs.size());
  r.to.resize(2 * arcs.size());
  r.adj.assign(net.node_count(), {});
  for (std::uint32_t i = 0; i < arcs.size(); ++i) {
    r.cap[2 * i] = arcs[i].capacity;
    r.cap[2 * i + 1] = 0;
    r.to[2 * i] = arcs[i].head;
    r.to[2 * i + 1] = arcs[i].tail;
    r.adj[arcs[i].tail].push_back(2 * i);
    r.adj[arcs[i].head].push_back(2 * i + 1);
  }
  return r;
}

std::vector<std::uint32_t> forward_reach(const Residual& r, std::uint32_t from) {
  std::vector<char> seen(r.adj.size(), 0);
  std::vector<std::uint32_t> queue{from};
  seen[from] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto a : r.adj[queue[q]]) {
      if (r.cap[a] > 0 && !seen[r.to[a]]) {
        seen[r.to[a]] = 1;
        queue.push_back(r.to[a]);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// Nodes u with a residual path u -> target.
std::vector<std::uint32_t> backward_reach(const Residual& r, std::uint32_t target) {
  std::vector<char> seen(r.adj.size(), 0);
  std::vector<std::uint32_t> queue{target};
  seen[target] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    // Arc a leaves queue[q]; its partner a^1 enters queue[q] from r.to[a].
    for (auto a : r.adj[queue[q]]) {
      const auto partner = a ^ 1u;
      const auto from = r.to[a];
      if (r.cap[partner] > 0 && !seen[from]) {
        seen[from] = 1;
        queue.push_back(from);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<std::size_t>> decompose(const FlowNetwork& net, std::vector<std::int64_t> flow) {
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::vector<std::size_t>> out(net.node_count());
  const auto arcs = net.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) out[arcs[i].tail].push_back(i);

  auto has_flow = [&](std::size_t a) { return flow[a] > 0; };
  std::vector<std::int64_t> position(net.node_count(), -1);
  while (std::any_of(out[net.source].begin(), out[net.source].end(), has_flow)) {
    std::vector<std::size_t> walk;
    std::fill(position.begin(), position.end(), -1);
    position[net.source] = 0;
    std::uint32_t at = net.source;
    bool cancelled = false;
    while (at != net.sink) {
      auto it = std::find_if(out[at].begin(), out[at].end(), has_flow);
      if (it == out[at].end()) throw std::logic_error("flow conservation violated during decomposition");
      const auto next = arcs[*it].head;
      walk.push_back(*it);
      if (position[next] >= 0) {
        // Cancel the cycle closed by this arc and restart the walk.
        const auto begin = static_cast<std::size_t>(position[next]);
        std::int64_t m = std::numeric_limits<std::int64_t>::max();
        for (std::size_t p = begin; p < walk.size(); ++p) m = std::min(m, flow[walk[p]]);
        for (std::size_t p = begin; p < walk.size(); ++p) flow[walk[p]] -= m;
        cancelled = true;
        break;
      }
      position[next] = static_cast<std::int64_t>(walk.size());
      at = next;
    }
    if (cancelled) continue;
    for (auto a : walk) flow[a] -= 1;
    paths.push_back(std::move(walk));
  }
  return paths;
}

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  if (net.node_count() == 0 || net.source >= net.node_count() || net.sink >= net.node_count()) {
    throw InputError("flow terminals out of range");
  }
  if (net.source == net.sink) throw InputError("flow source equals sink");

  Residual r = make_residual(net);
  FlowResult result;
  std::vector<std::int64_t> parent(net.node_count());
  std::vector<std::uint32_t> queue;
  queue.reserve(net.node_count());
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[net.source] = -2;
    queue.clear();
    queue.push_back(net.source);
    for (std::size_t q = 0; q < queue.size() && parent[net.sink] == -1; ++q) {
      for (auto a : r.adj[queue[q]]) {
        const auto v = r.to[a];
        if (r.cap[a] > 0 && parent[v] == -1) {
          parent[v] = a;
          queue.push_back(v);
        }
      }
    }
    if (parent[net.sink] == -1) break;
    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (auto v = net.sink; v != net.source; v = r.to[static_cast<std::uint32_t>(parent[v]) ^ 1u]) {
      bottleneck = std::min(bottleneck, r.cap[static_cast<std::size_t>(parent[v])]);
    }
    for (auto v = net.sink; v != net.source; v = r.to[static_cast<std::uint32_t>(parent[v]) ^ 1u]) {
      const auto a = static_cast<std::uint32_t>(parent[v]);
      r.cap[a] -= bottleneck;
      r.cap[a ^ 1u] += bottleneck;
    }
    result.value += bottleneck;
  }

  const auto arcs = net.arcs();
  result.arc_flow.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) result.arc_flow[i] = r.cap[2 * i + 1];
  result.source_side_min = forward_reach(r, net.source);
  result.sink_side_min = backward_reach(r, net.sink);
  result.paths = decompose(net, result.arc_flow);
  return result;
}

}  // namespace branchpack

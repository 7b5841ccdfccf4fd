#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace branchpack {

struct FlowArc {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
  std::int64_t capacity = 0;
};

/// Integer-capacity network on nodes 0..n-1.
class FlowNetwork {
 public:
  FlowNetwork() = default;
  explicit FlowNetwork(std::size_t nodes) : node_count_(nodes) {}

  std::uint32_t add_node() { return static_cast<std::uint32_t>(node_count_++); }
  std::size_t add_arc(std::uint32_t tail, std::uint32_t head, std::int64_t capacity);

  std::size_t node_count() const { return node_count_; }
  std::span<const FlowArc> arcs() const { return arcs_; }

  std::uint32_t source = 0;
  std::uint32_t sink = 0;

 private:
  std::size_t node_count_ = 0;
  std::vector<FlowArc> arcs_;
};

struct FlowResult {
  std::int64_t value = 0;
  /// One entry per unit of flow; each is a simple source->sink arc sequence.
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::int64_t> arc_flow;
  /// Nodes reachable from the source in the residual network.
  std::vector<std::uint32_t> source_side_min;
  /// Nodes that reach the sink in the residual network: the sink side of the
  /// minimum cut whose sink side is smallest.
  std::vector<std::uint32_t> sink_side_min;
};

/// Shortest-augmenting-path max flow. Nodes are scanned in FIFO order and
/// arcs in insertion order, so results are reproducible.
FlowResult max_flow(const FlowNetwork& net);

}  // namespace branchpack

#pragma once

// Directed flow networks and an exact max-flow / min-cut solver.

#include <cstddef>
#include <span>
#include <vector>

#include "augsparse/gadget.hpp"

namespace augsparse {

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  double capacity = 0.0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable after construction. Parallel arcs are merged by summing their
// capacities; self-loops and zero-capacity arcs are dropped. The surviving
// arcs are ordered by (tail, head).
class FlowNetwork {
 public:
  FlowNetwork() = default;
  FlowNetwork(std::size_t node_count, NodeId source, NodeId sink, std::vector<Arc> arcs);

  std::size_t node_count() const noexcept { return node_count_; }
  NodeId source() const noexcept { return source_; }
  NodeId sink() const noexcept { return sink_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  double max_capacity() const noexcept { return max_capacity_; }

 private:
  std::size_t node_count_ = 2;
  NodeId source_ = 0;
  NodeId sink_ = 1;
  std::vector<Arc> arcs_;
  double max_capacity_ = 0.0;
};

struct MinCutResult {
  double flow_value = 0.0;
  // Nodes reachable from the source in the final residual graph, ascending.
  std::vector<NodeId> source_side;
  // Flow on each arc of the network, aligned with FlowNetwork::arcs().
  std::vector<double> arc_flow;
};

// Blocking-flow (Dinic) max flow. Residual capacities below
// 1e-12 * max_capacity() count as saturated.
MinCutResult max_flow_min_cut(const FlowNetwork& net);

// Total capacity of arcs leaving `side`. `side` must contain the source and
// not the sink; throws DomainError otherwise.
double directed_cut_value(const FlowNetwork& net, std::span<const NodeId> side);

}  // namespace augsparse

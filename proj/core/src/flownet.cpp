#include "augsparse/flownet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "augsparse/error.hpp"

namespace augsparse {
namespace {

constexpr double kSaturationTolerance = 1e-12;

// Residual graph in CSR form. Arc i of the network owns residual edges 2i
// (forward) and 2i + 1 (reverse).
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net),
        n_(net.node_count()),
        head_(2 * net.arcs().size()),
        residual_(2 * net.arcs().size()),
        offset_(n_ + 1, 0),
        adjacency_(2 * net.arcs().size()),
        level_(n_),
        cursor_(n_) {
    const auto arcs = net.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      head_[2 * i] = arcs[i].head;
      head_[2 * i + 1] = arcs[i].tail;
      residual_[2 * i] = arcs[i].capacity;
      residual_[2 * i + 1] = 0.0;
      ++offset_[arcs[i].tail + 1];
      ++offset_[arcs[i].head + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) offset_[v + 1] += offset_[v];
    std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      adjacency_[fill[arcs[i].tail]++] = 2 * i;
      adjacency_[fill[arcs[i].head]++] = 2 * i + 1;
    }
    tolerance_ = kSaturationTolerance * net.max_capacity();
  }

  MinCutResult run() {
    double total = 0.0;
    while (build_levels()) {
      std::copy(offset_.begin(), offset_.end() - 1, cursor_.begin());
      total += blocking_flow();
    }
    MinCutResult result;
    result.flow_value = total;
    for (std::size_t v = 0; v < n_; ++v) {
      if (level_[v] >= 0) result.source_side.push_back(static_cast<NodeId>(v));
    }
    const auto arcs = net_.arcs();
    result.arc_flow.resize(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      result.arc_flow[i] = std::clamp(residual_[2 * i + 1], 0.0, arcs[i].capacity);
    }
    return result;
  }

 private:
  bool usable(std::size_t e) const { return residual_[e] > tolerance_; }

  // BFS from the source; returns whether the sink is reachable. On the final
  // call level_ >= 0 marks the residual source side.
  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<NodeId> queue;
    queue.reserve(n_);
    level_[net_.source()] = 0;
    queue.push_back(net_.source());
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const NodeId v = queue[q];
      for (std::size_t k = offset_[v]; k < offset_[v + 1]; ++k) {
        const std::size_t e = adjacency_[k];
        const NodeId w = head_[e];
        if (level_[w] < 0 && usable(e)) {
          level_[w] = level_[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return level_[net_.sink()] >= 0;
  }

  // Iterative DFS with current-arc pointers. After each augmentation the path
  // is cut back to the tail of its first saturated edge.
  double blocking_flow() {
    double pushed = 0.0;
    std::vector<std::size_t> path;
    NodeId v = net_.source();
    while (true) {
      if (v == net_.sink()) {
        double bottleneck = std::numeric_limits<double>::infinity();
        for (std::size_t e : path) bottleneck = std::min(bottleneck, residual_[e]);
        std::size_t cut_at = path.size();
        for (std::size_t idx = 0; idx < path.size(); ++idx) {
          const std::size_t e = path[idx];
          residual_[e] -= bottleneck;
          residual_[e ^ 1] += bottleneck;
          if (cut_at == path.size() && !usable(e)) cut_at = idx;
        }
        pushed += bottleneck;
        path.resize(cut_at);
        v = path.empty() ? net_.source() : head_[path.back()];
        continue;
      }
      bool advanced = false;
      for (std::size_t& k = cursor_[v]; k < offset_[v + 1]; ++k) {
        const std::size_t e = adjacency_[k];
        const NodeId w = head_[e];
        if (usable(e) && level_[w] == level_[v] + 1) {
          path.push_back(e);
          v = w;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (v == net_.source()) break;
      // Dead end: retire v for this phase and step back.
      level_[v] = -2;
      path.pop_back();
      v = path.empty() ? net_.source() : head_[path.back()];
      ++cursor_[v];
    }
    return pushed;
  }

  const FlowNetwork& net_;
  std::size_t n_;
  std::vector<NodeId> head_;
  std::vector<double> residual_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  double tolerance_ = 0.0;
};

}  // namespace

FlowNetwork::FlowNetwork(std::size_t node_count, NodeId source, NodeId sink,
                         std::vector<Arc> arcs)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (source >= node_count || sink >= node_count) {
    throw DomainError("flow network terminals must be valid node ids");
  }
  if (source == sink) throw DomainError("flow network source and sink must differ");
  for (const Arc& arc : arcs) {
    if (arc.tail >= node_count || arc.head >= node_count) {
      throw DomainError("arc endpoint out of range");
    }
    if (!(arc.capacity >= 0.0) || !std::isfinite(arc.capacity)) {
      throw DomainError("arc capacities must be finite and nonnegative");
    }
  }
  std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  });
  for (const Arc& arc : arcs) {
    if (arc.tail == arc.head || arc.capacity == 0.0) continue;
    if (!arcs_.empty() && arcs_.back().tail == arc.tail && arcs_.back().head == arc.head) {
      arcs_.back().capacity += arc.capacity;
    } else {
      arcs_.push_back(arc);
    }
  }
  for (const Arc& arc : arcs_) max_capacity_ = std::max(max_capacity_, arc.capacity);
}

MinCutResult max_flow_min_cut(const FlowNetwork& net) { return Dinic(net).run(); }

double directed_cut_value(const FlowNetwork& net, std::span<const NodeId> side) {
  std::vector<char> in(net.node_count(), 0);
  for (NodeId v : side) {
    if (v >= net.node_count()) throw DomainError("cut set contains an unknown node");
    in[v] = 1;
  }
  if (!in[net.source()] || in[net.sink()]) {
    throw DomainError("cut set must contain the source and exclude the sink");
  }
  double total = 0.0;
  for (const Arc& arc : net.arcs()) {
    if (in[arc.tail] && !in[arc.head]) total += arc.capacity;
  }
  return total;
}

}  // namespace augsparse

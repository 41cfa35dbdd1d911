#pragma once

// Augmented sparsifiers and s-t networks built from hypergraphs.
//
// Every hyperedge is covered, converted to gadget parameters and expanded
// into a fragment. Node numbering is deterministic: original nodes
// 0..n-1, then auxiliaries in hyperedge order, then the source and sink.

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "augsparse/flownet.hpp"
#include "augsparse/plcover.hpp"
#include "augsparse/splitting.hpp"

namespace augsparse {

struct Hyperedge {
  std::vector<NodeId> members;
  std::variant<SplittingSpec, GscbFunction> penalty;

  bool is_symmetric() const noexcept {
    return std::holds_alternative<SplittingSpec>(penalty);
  }
};

struct Hypergraph {
  std::size_t n = 0;
  std::vector<Hyperedge> edges;

  // Members distinct and in range, size >= 1, GSCB length = size + 1,
  // specs valid. Throws DomainError / SpecError / ValidationError.
  void validate() const;
  bool is_symmetric() const noexcept;
};

// Generalized hypergraph cut: Sum_e w_e(|S cap e|).
double hypergraph_cut(const Hypergraph& h, std::span<const NodeId> side);

enum class NodeKind : std::uint8_t { kOriginal, kAuxiliary, kSource, kSink };

struct NodeRole {
  NodeKind kind = NodeKind::kOriginal;
  // Original: node id. Auxiliary: owning hyperedge and fragment-local index.
  std::uint32_t hyperedge = 0;
  std::uint32_t local = 0;
};

// Gadget parameters kept per hyperedge for analytic cut evaluation.
struct EdgeGadget {
  std::vector<NodeId> members;
  std::variant<CcbParams, KcgParams> params;
};

struct BuildStats {
  std::size_t hyperedges = 0;
  std::size_t total_size = 0;
  std::size_t aux_nodes = 0;
  std::size_t arcs = 0;
  // Gadget count per covered hyperedge, in hyperedge order.
  std::vector<std::size_t> pieces;
  double cover_ms = 0.0;
  double build_ms = 0.0;
};

class AugmentedGraph {
 public:
  AugmentedGraph() = default;
  AugmentedGraph(FlowNetwork net, std::vector<NodeRole> roles,
                 std::vector<EdgeGadget> gadgets, std::size_t original_count,
                 BuildStats stats);

  const FlowNetwork& net() const noexcept { return net_; }
  std::span<const NodeRole> roles() const noexcept { return roles_; }
  std::span<const EdgeGadget> gadgets() const noexcept { return gadgets_; }
  std::size_t original_count() const noexcept { return original_count_; }
  const BuildStats& stats() const noexcept { return stats_; }
  void record_build_time(double ms) noexcept { stats_.build_ms = ms; }

 private:
  FlowNetwork net_;
  std::vector<NodeRole> roles_;
  std::vector<EdgeGadget> gadgets_;
  std::size_t original_count_ = 0;
  BuildStats stats_;
};

struct BuildOptions {
  // Worker threads for covering distinct penalty shapes; output is
  // independent of this value.
  unsigned threads = 1;
  // Nodes tied to the source / sink with effectively infinite capacity.
  std::vector<NodeId> source_nodes;
  std::vector<NodeId> sink_nodes;
};

// Accumulates gadget fragments into an AugmentedGraph.
class AugmentedGraphBuilder {
 public:
  explicit AugmentedGraphBuilder(std::size_t original_count);

  void add(std::span<const NodeId> members, const GraphFragment& fragment,
           std::variant<CcbParams, KcgParams> params, std::uint32_t hyperedge);
  // Terminal arcs source -> v or v -> sink.
  void tie_to_source(NodeId v, double capacity);
  void tie_to_sink(NodeId v, double capacity);

  AugmentedGraph finish(BuildStats stats) &&;

 private:
  std::size_t original_count_;
  std::vector<NodeRole> aux_roles_;
  std::vector<EdgeGadget> gadgets_;
  struct PendingArc {
    // kMember refers to an original node id; kAuxiliary to a builder-wide
    // auxiliary index. Resolved to global ids in finish().
    NodeRef tail;
    NodeRef head;
    double capacity;
  };
  std::vector<PendingArc> arcs_;
};

// Symmetric hypergraph -> augmented cut sparsifier (CB-gadgets).
AugmentedGraph build_sparsifier(const Hypergraph& h, double eps,
                                const BuildOptions& options = {});

// Hypergraph with GSCB (or mirrored symmetric) penalties -> s-t network
// (ACB-gadgets plus terminal arcs).
AugmentedGraph build_st_network(const Hypergraph& h, double eps,
                                const BuildOptions& options = {});

// Min over auxiliary placements of the directed cut for S, evaluated from the
// stored gadget parameters. Throws DomainError for non-original ids.
double augmented_cut(const AugmentedGraph& g, std::span<const NodeId> side);

// Capacity used for "infinite" terminal ties: 1e6 times the given mass
// (or 1e6 when the mass is zero).
double infinite_capacity(double penalty_mass);

}  // namespace augsparse

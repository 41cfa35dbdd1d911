#include "augsparse/reduce.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include "augsparse/error.hpp"

namespace augsparse {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Runs job(i) for i in [0, count) on up to `threads` workers; rethrows the
// first failure.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& job) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            job(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::string shape_key(const Hyperedge& e) {
  std::ostringstream key;
  key.precision(17);
  key << e.members.size() << '|';
  if (const auto* spec = std::get_if<SplittingSpec>(&e.penalty)) {
    key << "s " << spec->unit().to_string();
  } else {
    key << 'g';
    for (double v : std::get<GscbFunction>(e.penalty).values()) key << ' ' << v;
  }
  return key.str();
}

double edge_weight(const Hyperedge& e) {
  if (const auto* spec = std::get_if<SplittingSpec>(&e.penalty)) return spec->weight;
  return 1.0;
}

double max_penalty(const Hyperedge& e) {
  if (const auto* spec = std::get_if<SplittingSpec>(&e.penalty)) {
    const int k = static_cast<int>(e.members.size());
    double best = 0.0;
    for (int i = 0; i <= k; ++i) best = std::max(best, evaluate(*spec, k, i));
    return best;
  }
  return std::get<GscbFunction>(e.penalty).max_value();
}

// Covers each distinct (shape, size) once; returns the per-edge index into
// the shape table and fills `shapes` via `cover_shape`.
template <typename Params>
std::vector<std::size_t> cover_shapes(
    const Hypergraph& h, const std::function<bool(const Hyperedge&)>& included,
    const std::function<Params(const Hyperedge&)>& cover_shape, unsigned threads,
    std::vector<Params>& shapes) {
  constexpr auto kSkipped = static_cast<std::size_t>(-1);
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> representative;
  std::vector<std::size_t> edge_shape(h.edges.size(), kSkipped);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    if (!included(h.edges[e])) continue;
    auto [it, inserted] = index.emplace(shape_key(h.edges[e]), representative.size());
    if (inserted) representative.push_back(e);
    edge_shape[e] = it->second;
  }
  shapes.assign(representative.size(), Params{});
  parallel_for(representative.size(), threads, [&](std::size_t s) {
    shapes[s] = cover_shape(h.edges[representative[s]]);
  });
  return edge_shape;
}

void add_terminal_ties(AugmentedGraphBuilder& builder, const Hypergraph& h,
                       const BuildOptions& options) {
  if (options.source_nodes.empty() && options.sink_nodes.empty()) return;
  std::vector<char> seen(h.n, 0);
  for (NodeId v : options.source_nodes) {
    if (v >= h.n) throw DomainError("source node out of range");
    seen[v] |= 1;
  }
  for (NodeId v : options.sink_nodes) {
    if (v >= h.n) throw DomainError("sink node out of range");
    seen[v] |= 2;
  }
  double mass = 0.0;
  for (const Hyperedge& e : h.edges) mass += max_penalty(e);
  const double inf = infinite_capacity(mass);
  for (NodeId v = 0; v < h.n; ++v) {
    if (seen[v] == 3) throw DomainError("node " + std::to_string(v) + " tied to both terminals");
    if (seen[v] & 1) builder.tie_to_source(v, inf);
    if (seen[v] & 2) builder.tie_to_sink(v, inf);
  }
}

}  // namespace

void Hypergraph::validate() const {
  std::vector<std::size_t> stamp(n, static_cast<std::size_t>(-1));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Hyperedge& edge = edges[e];
    if (edge.members.empty()) {
      throw DomainError("hyperedge " + std::to_string(e) + " is empty");
    }
    for (NodeId v : edge.members) {
      if (v >= n) {
        throw DomainError("hyperedge " + std::to_string(e) + " references node " +
                          std::to_string(v) + " outside [0, n)");
      }
      if (stamp[v] == e) {
        throw DomainError("hyperedge " + std::to_string(e) + " repeats node " +
                          std::to_string(v));
      }
      stamp[v] = e;
    }
    if (const auto* spec = std::get_if<SplittingSpec>(&edge.penalty)) {
      spec->validate();
      if (spec->family == Family::kCustom) {
        evaluate(*spec, static_cast<int>(edge.members.size()), 0);
      }
    } else {
      const auto& w = std::get<GscbFunction>(edge.penalty);
      if (static_cast<std::size_t>(w.k()) != edge.members.size()) {
        throw SpecError("hyperedge " + std::to_string(e) + " has " +
                        std::to_string(edge.members.size()) + " members but " +
                        std::to_string(w.k() + 1) + " penalties");
      }
    }
  }
}

bool Hypergraph::is_symmetric() const noexcept {
  return std::all_of(edges.begin(), edges.end(),
                     [](const Hyperedge& e) { return e.is_symmetric(); });
}

double hypergraph_cut(const Hypergraph& h, std::span<const NodeId> side) {
  std::vector<char> in(h.n, 0);
  for (NodeId v : side) {
    if (v >= h.n) throw DomainError("cut set contains a node outside [0, n)");
    in[v] = 1;
  }
  double total = 0.0;
  for (const Hyperedge& e : h.edges) {
    int i = 0;
    for (NodeId v : e.members) i += in[v];
    const int k = static_cast<int>(e.members.size());
    if (const auto* spec = std::get_if<SplittingSpec>(&e.penalty)) {
      total += evaluate(*spec, k, i);
    } else {
      total += std::get<GscbFunction>(e.penalty)(i);
    }
  }
  return total;
}

AugmentedGraph::AugmentedGraph(FlowNetwork net, std::vector<NodeRole> roles,
                               std::vector<EdgeGadget> gadgets, std::size_t original_count,
                               BuildStats stats)
    : net_(std::move(net)),
      roles_(std::move(roles)),
      gadgets_(std::move(gadgets)),
      original_count_(original_count),
      stats_(std::move(stats)) {}

AugmentedGraphBuilder::AugmentedGraphBuilder(std::size_t original_count)
    : original_count_(original_count) {}

void AugmentedGraphBuilder::add(std::span<const NodeId> members, const GraphFragment& fragment,
                                std::variant<CcbParams, KcgParams> params,
                                std::uint32_t hyperedge) {
  const auto aux_base = static_cast<std::uint32_t>(aux_roles_.size());
  for (std::uint32_t a = 0; a < fragment.aux_count; ++a) {
    aux_roles_.push_back({NodeKind::kAuxiliary, hyperedge, a});
  }
  auto resolve = [&](NodeRef ref) {
    switch (ref.kind) {
      case NodeRef::Kind::kMember: return NodeRef::member(members[ref.index]);
      case NodeRef::Kind::kAuxiliary: return NodeRef::auxiliary(aux_base + ref.index);
      default: return ref;
    }
  };
  for (const FragmentArc& arc : fragment.arcs) {
    arcs_.push_back({resolve(arc.tail), resolve(arc.head), arc.capacity});
  }
  gadgets_.push_back({std::vector<NodeId>(members.begin(), members.end()), std::move(params)});
}

void AugmentedGraphBuilder::tie_to_source(NodeId v, double capacity) {
  arcs_.push_back({NodeRef::source(), NodeRef::member(v), capacity});
}

void AugmentedGraphBuilder::tie_to_sink(NodeId v, double capacity) {
  arcs_.push_back({NodeRef::member(v), NodeRef::sink(), capacity});
}

AugmentedGraph AugmentedGraphBuilder::finish(BuildStats stats) && {
  const std::size_t aux = aux_roles_.size();
  const auto source = static_cast<NodeId>(original_count_ + aux);
  const auto sink = source + 1;
  auto resolve = [&](NodeRef ref) -> NodeId {
    switch (ref.kind) {
      case NodeRef::Kind::kMember: return ref.index;
      case NodeRef::Kind::kAuxiliary: return static_cast<NodeId>(original_count_ + ref.index);
      case NodeRef::Kind::kSource: return source;
      case NodeRef::Kind::kSink: return sink;
    }
    return source;
  };
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const PendingArc& arc : arcs_) {
    arcs.push_back({resolve(arc.tail), resolve(arc.head), arc.capacity});
  }
  arcs_.clear();
  arcs_.shrink_to_fit();

  std::vector<NodeRole> roles;
  roles.reserve(original_count_ + aux + 2);
  for (std::size_t v = 0; v < original_count_; ++v) {
    roles.push_back({NodeKind::kOriginal, 0, static_cast<std::uint32_t>(v)});
  }
  roles.insert(roles.end(), aux_roles_.begin(), aux_roles_.end());
  roles.push_back({NodeKind::kSource, 0, 0});
  roles.push_back({NodeKind::kSink, 0, 0});

  FlowNetwork net(original_count_ + aux + 2, source, sink, std::move(arcs));
  stats.aux_nodes = aux;
  stats.arcs = net.arcs().size();
  return AugmentedGraph(std::move(net), std::move(roles), std::move(gadgets_), original_count_,
                        std::move(stats));
}

AugmentedGraph build_sparsifier(const Hypergraph& h, double eps, const BuildOptions& options) {
  if (eps < 0.0) throw DomainError("eps must be nonnegative");
  h.validate();
  if (!h.is_symmetric()) {
    throw SpecError("build_sparsifier needs symmetric splitting functions; use build_st_network");
  }
  BuildStats stats;
  auto start = Clock::now();
  std::vector<CcbParams> shapes;
  const auto edge_shape = cover_shapes<CcbParams>(
      h,
      [](const Hyperedge& e) {
        return e.members.size() >= 2 && std::get<SplittingSpec>(e.penalty).weight > 0.0;
      },
      [eps](const Hyperedge& e) {
        const auto& spec = std::get<SplittingSpec>(e.penalty);
        const int k = static_cast<int>(e.members.size());
        return cover_to_ccb(find_best_cover(materialize_scb(spec.unit(), k), eps));
      },
      options.threads, shapes);
  stats.cover_ms = elapsed_ms(start);

  start = Clock::now();
  AugmentedGraphBuilder builder(h.n);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const Hyperedge& edge = h.edges[e];
    stats.total_size += edge.members.size();
    if (edge_shape[e] == static_cast<std::size_t>(-1)) {
      stats.pieces.push_back(0);
      continue;
    }
    const CcbParams params = shapes[edge_shape[e]].scaled(edge_weight(edge));
    const auto k = static_cast<std::uint32_t>(edge.members.size());
    builder.add(edge.members, expand_ccb(k, params), params, static_cast<std::uint32_t>(e));
    stats.pieces.push_back(params.order());
  }
  add_terminal_ties(builder, h, options);
  stats.hyperedges = h.edges.size();
  auto graph = std::move(builder).finish(std::move(stats));
  graph.record_build_time(elapsed_ms(start));
  return graph;
}

AugmentedGraph build_st_network(const Hypergraph& h, double eps, const BuildOptions& options) {
  if (eps < 0.0) throw DomainError("eps must be nonnegative");
  h.validate();
  BuildStats stats;
  auto start = Clock::now();
  std::vector<KcgParams> shapes;
  const auto edge_shape = cover_shapes<KcgParams>(
      h, [](const Hyperedge& e) { return edge_weight(e) > 0.0; },
      [eps](const Hyperedge& e) {
        const int k = static_cast<int>(e.members.size());
        const GscbFunction w =
            e.is_symmetric()
                ? symmetric_to_gscb(std::get<SplittingSpec>(e.penalty).unit(), k)
                : std::get<GscbFunction>(e.penalty);
        return cover_to_kcg(gscb_cover(w, eps), k);
      },
      options.threads, shapes);
  stats.cover_ms = elapsed_ms(start);

  start = Clock::now();
  AugmentedGraphBuilder builder(h.n);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const Hyperedge& edge = h.edges[e];
    stats.total_size += edge.members.size();
    if (edge_shape[e] == static_cast<std::size_t>(-1)) {
      stats.pieces.push_back(0);
      continue;
    }
    const KcgParams params = shapes[edge_shape[e]].scaled(edge_weight(edge));
    const auto k = static_cast<std::uint32_t>(edge.members.size());
    builder.add(edge.members, expand_kcg(k, params), params, static_cast<std::uint32_t>(e));
    stats.pieces.push_back(params.order());
  }
  add_terminal_ties(builder, h, options);
  stats.hyperedges = h.edges.size();
  auto graph = std::move(builder).finish(std::move(stats));
  graph.record_build_time(elapsed_ms(start));
  return graph;
}

double augmented_cut(const AugmentedGraph& g, std::span<const NodeId> side) {
  std::vector<char> in(g.original_count(), 0);
  for (NodeId v : side) {
    if (v >= g.original_count()) {
      throw DomainError("augmented_cut: node " + std::to_string(v) + " is not an original node");
    }
    in[v] = 1;
  }
  double total = 0.0;
  for (const EdgeGadget& gadget : g.gadgets()) {
    int i = 0;
    for (NodeId v : gadget.members) i += in[v];
    const int k = static_cast<int>(gadget.members.size());
    if (const auto* ccb = std::get_if<CcbParams>(&gadget.params)) {
      total += augmented_cut_cb(*ccb, k, i);
    } else {
      total += augmented_cut_acb(std::get<KcgParams>(gadget.params), k, i);
    }
  }
  return total;
}

double infinite_capacity(double penalty_mass) {
  return 1e6 * (penalty_mass > 0.0 ? penalty_mass : 1.0);
}

}  // namespace augsparse

#include "augsparse/dsfm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "augsparse/error.hpp"

namespace augsparse {

void DsfmInstance::validate() const { to_hypergraph().validate(); }

Hypergraph DsfmInstance::to_hypergraph() const {
  Hypergraph h;
  h.n = n;
  h.edges.reserve(components.size());
  for (const DsfmComponent& c : components) h.edges.push_back({c.support, c.f});
  return h;
}

DsfmInstance to_dsfm(const Hypergraph& h) {
  h.validate();
  DsfmInstance inst;
  inst.n = h.n;
  for (const Hyperedge& e : h.edges) {
    const int k = static_cast<int>(e.members.size());
    if (const auto* spec = std::get_if<SplittingSpec>(&e.penalty)) {
      inst.components.push_back({e.members, symmetric_to_gscb(*spec, k)});
    } else {
      inst.components.push_back({e.members, std::get<GscbFunction>(e.penalty)});
    }
  }
  return inst;
}

double evaluate_f(const DsfmInstance& inst, std::span<const NodeId> side) {
  std::vector<char> in(inst.n, 0);
  for (NodeId v : side) {
    if (v >= inst.n) throw DomainError("set contains a node outside [0, n)");
    in[v] = 1;
  }
  double total = 0.0;
  for (const DsfmComponent& c : inst.components) {
    int i = 0;
    for (NodeId v : c.support) i += in[v];
    total += c.f(i);
  }
  return total;
}

Solution sparse_card(const DsfmInstance& inst, double eps, const Seeds& seeds,
                     unsigned threads) {
  std::vector<char> seeded(inst.n, 0);
  for (NodeId v : seeds.include) {
    if (v < inst.n) seeded[v] = 1;
  }
  for (NodeId v : seeds.exclude) {
    if (v < inst.n && seeded[v]) {
      throw DomainError("node " + std::to_string(v) + " is both included and excluded");
    }
  }

  BuildOptions options;
  options.threads = threads;
  options.source_nodes = seeds.include;
  options.sink_nodes = seeds.exclude;
  const AugmentedGraph g = build_st_network(inst.to_hypergraph(), eps, options);

  const auto start = std::chrono::steady_clock::now();
  const MinCutResult cut = max_flow_min_cut(g.net());
  Solution sol;
  sol.solve_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  for (NodeId v : cut.source_side) {
    if (v < inst.n) sol.set.push_back(v);
  }
  sol.value = evaluate_f(inst, sol.set);
  sol.cut_value = cut.flow_value;
  sol.epsilon = eps;
  sol.a_priori_bound = (1.0 + eps) * cut.flow_value;
  sol.nodes = g.net().node_count();
  sol.arcs = g.net().arcs().size();
  for (std::size_t p : g.stats().pieces) sol.pieces += p;
  sol.cover_ms = g.stats().cover_ms;
  sol.build_ms = g.stats().build_ms;
  return sol;
}

Ratio a_posteriori_ratio(const Solution& sol, double opt_value) {
  if (opt_value < 0.0) throw DomainError("optimum must be nonnegative");
  if (opt_value == 0.0) {
    if (std::abs(sol.value) <= 1e-12) return {1.0, true};
    return {std::numeric_limits<double>::infinity(), false};
  }
  return {sol.value / opt_value, false};
}

}  // namespace augsparse

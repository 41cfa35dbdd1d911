#include "augsparse/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "augsparse/error.hpp"

namespace augsparse::oracle {
namespace {

using Mask = std::uint64_t;

std::vector<NodeId> mask_to_set(Mask mask) {
  std::vector<NodeId> set;
  for (NodeId v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) set.push_back(v);
  }
  return set;
}

Mask support_mask(const std::vector<NodeId>& members) {
  Mask m = 0;
  for (NodeId v : members) m |= Mask{1} << v;
  return m;
}

// Lexicographic order of the sorted id lists encoded by two masks.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask d = (a ^ b) & (~(a ^ b) + 1);
  const Mask above = ~((d << 1) - 1);
  if (a & d) return (b & above) != 0;
  return (a & above) == 0;
}

struct Interval {
  int lo;
  int hi;
};

// Maximal runs of indices covered by the line through (x0, y0) with `slope`.
// Candidates that dip below w anywhere are discarded.
void add_line_intervals(const std::vector<double>& w, double eps, double x0, double y0,
                        double slope, double tol, std::vector<Interval>& out) {
  const int last = static_cast<int>(w.size()) - 1;
  for (int i = 0; i <= last; ++i) {
    if (y0 + slope * (i - x0) < w[i] - tol) return;
  }
  int run = -1;
  for (int i = 0; i <= last + 1; ++i) {
    const bool hit = i <= last && y0 + slope * (i - x0) <= (1.0 + eps) * w[i] + tol;
    if (hit && run < 0) run = i;
    if (!hit && run >= 0) {
      out.push_back({run, i - 1});
      run = -1;
    }
  }
}

// Lines touching w at an integer point: chords of adjacent points and lines
// through (l, (1+eps) w(l)) and (j, w(j)).
std::vector<std::pair<Interval, double>> candidate_intervals(const std::vector<double>& w,
                                                             double eps, double tol) {
  const int last = static_cast<int>(w.size()) - 1;
  std::vector<std::pair<Interval, double>> out;
  auto push = [&](double x0, double y0, double slope) {
    std::vector<Interval> runs;
    add_line_intervals(w, eps, x0, y0, slope, tol, runs);
    for (const Interval& iv : runs) out.push_back({iv, slope});
  };
  for (int j = 0; j < last; ++j) push(j, w[j], w[j + 1] - w[j]);
  for (int l = 0; l <= last; ++l) {
    for (int j = 0; j <= last; ++j) {
      if (l == j) continue;
      push(j, w[j], ((1.0 + eps) * w[l] - w[j]) / (l - j));
    }
  }
  return out;
}

// Fewest intervals covering 0..last, where indices >= free_from are covered
// at no cost.
int interval_cover_dp(const std::vector<Interval>& intervals, int last, int free_from) {
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  // dp[x]: fewest intervals covering 0..x-1.
  std::vector<int> dp(last + 2, kInf);
  dp[0] = 0;
  for (int x = 0; x <= last; ++x) {
    if (dp[x] >= kInf) continue;
    for (const Interval& iv : intervals) {
      if (iv.lo <= x && iv.hi >= x) dp[iv.hi + 1] = std::min(dp[iv.hi + 1], dp[x] + 1);
    }
  }
  int best = dp[last + 1];
  for (int x = std::max(0, free_from); x <= last; ++x) best = std::min(best, dp[x]);
  if (best >= kInf) throw Error("min_cover_size_dp: no cover found");
  return best;
}

}  // namespace

MinResult brute_min_f(const DsfmInstance& inst) {
  if (inst.n > 22) throw RefusalError("brute_min_f handles at most 22 nodes");
  std::vector<Mask> supports;
  for (const auto& c : inst.components) supports.push_back(support_mask(c.support));
  const Mask count = Mask{1} << inst.n;
  auto value = [&](Mask s) {
    double total = 0.0;
    for (std::size_t e = 0; e < supports.size(); ++e) {
      total += inst.components[e].f.values()[std::popcount(s & supports[e])];
    }
    return total;
  };
  double best = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (Mask s = 0; s < count; ++s) {
    const double v = value(s);
    best = std::min(best, v);
    scale = std::max(scale, std::abs(v));
  }
  const double tie = 1e-12 * std::max(1.0, scale);
  Mask arg = count;
  for (Mask s = 0; s < count; ++s) {
    if (value(s) <= best + tie && (arg == count || lex_less(s, arg))) arg = s;
  }
  return {mask_to_set(arg), value(arg)};
}

SandwichReport brute_cut_sandwich(const Hypergraph& h, const AugmentedGraph& g, double eps,
                                  double rel_tol) {
  if (h.n > 16) throw RefusalError("brute_cut_sandwich handles at most 16 nodes");
  std::vector<Mask> supports;
  std::vector<std::vector<double>> tables;
  double mass = 0.0;
  for (const Hyperedge& e : h.edges) {
    supports.push_back(support_mask(e.members));
    const int k = static_cast<int>(e.members.size());
    std::vector<double> t(k + 1);
    if (const auto* spec = std::get_if<SplittingSpec>(&e.penalty)) {
      for (int i = 0; i <= k; ++i) t[i] = evaluate(*spec, k, i);
    } else {
      t = std::get<GscbFunction>(e.penalty).values();
    }
    mass += *std::max_element(t.begin(), t.end());
    tables.push_back(std::move(t));
  }
  const double abs_tol = rel_tol * 1e-3 * std::max(1.0, mass);
  SandwichReport report;
  for (Mask s = 0; s < (Mask{1} << h.n); ++s) {
    double cut = 0.0;
    for (std::size_t e = 0; e < supports.size(); ++e) {
      cut += tables[e][std::popcount(s & supports[e])];
    }
    const auto set = mask_to_set(s);
    const double aug = augmented_cut(g, set);
    const bool low_ok = aug >= cut * (1.0 - rel_tol) - abs_tol;
    const bool high_ok = aug <= (1.0 + eps) * cut * (1.0 + rel_tol) + abs_tol;
    if (cut > abs_tol) report.max_ratio = std::max(report.max_ratio, aug / cut);
    if ((!low_ok || !high_ok) && report.ok) {
      report.ok = false;
      report.violation = set;
      report.cut = cut;
      report.augmented = aug;
    }
  }
  return report;
}

int min_cover_size_dp(const ScbFunction& w, double eps) {
  const int r = w.r();
  if (r > 20) throw RefusalError("min_cover_size_dp handles r <= 20");
  if (eps < 0.0) throw DomainError("eps must be nonnegative");
  const std::vector<double>& v = w.values();
  const double top = v.back();
  if (r == 0 || top <= 0.0) return 0;
  const double tol = 1e-10 * top;
  std::vector<Interval> intervals;
  for (const auto& [iv, slope] : candidate_intervals(v, eps, tol)) {
    // Flat upper bounds are never better than the constant top line.
    if (slope > tol) intervals.push_back(iv);
  }
  int free_from = r;
  while (free_from > 0 && top <= (1.0 + eps) * v[free_from - 1] + tol) --free_from;
  return interval_cover_dp(intervals, r, free_from);
}

int min_cover_size_dp(const GscbFunction& w, double eps) {
  const int k = w.k();
  if (k > 20) throw RefusalError("min_cover_size_dp handles k <= 20");
  if (eps < 0.0) throw DomainError("eps must be nonnegative");
  if (k == 0) return 1;
  const std::vector<double>& v = w.values();
  const double tol = 1e-10 * std::max(1e-300, w.max_value());
  std::vector<Interval> intervals;
  for (const auto& entry : candidate_intervals(v, eps, tol)) intervals.push_back(entry.first);
  return interval_cover_dp(intervals, k, k + 1);
}

double brute_aux_mincut(const GraphFragment& fragment, const std::vector<bool>& member_in) {
  if (fragment.aux_count > 20) throw RefusalError("brute_aux_mincut handles <= 20 auxiliaries");
  if (member_in.size() != fragment.member_count) {
    throw DomainError("member placement has the wrong length");
  }
  double best = std::numeric_limits<double>::infinity();
  for (Mask t = 0; t < (Mask{1} << fragment.aux_count); ++t) {
    auto inside = [&](const NodeRef& ref) {
      switch (ref.kind) {
        case NodeRef::Kind::kMember: return static_cast<bool>(member_in[ref.index]);
        case NodeRef::Kind::kAuxiliary: return ((t >> ref.index) & 1) != 0;
        case NodeRef::Kind::kSource: return true;
        case NodeRef::Kind::kSink: return false;
      }
      return false;
    };
    double cut = 0.0;
    for (const FragmentArc& arc : fragment.arcs) {
      if (inside(arc.tail) && !inside(arc.head)) cut += arc.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

double brute_min_st_cut(const FlowNetwork& net) {
  std::vector<NodeId> free_nodes;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (v != net.source() && v != net.sink()) free_nodes.push_back(v);
  }
  if (free_nodes.size() > 20) throw RefusalError("brute_min_st_cut handles <= 20 free nodes");
  std::vector<char> inside(net.node_count(), 0);
  inside[net.source()] = 1;
  double best = std::numeric_limits<double>::infinity();
  for (Mask s = 0; s < (Mask{1} << free_nodes.size()); ++s) {
    for (std::size_t j = 0; j < free_nodes.size(); ++j) inside[free_nodes[j]] = (s >> j) & 1;
    double cut = 0.0;
    for (const Arc& a : net.arcs()) {
      if (inside[a.tail] && !inside[a.head]) cut += a.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

double pinned_flow_cut(const AugmentedGraph& g, const std::vector<NodeId>& side) {
  const FlowNetwork& net = g.net();
  std::vector<char> in(g.original_count(), 0);
  for (NodeId v : side) in.at(v) = 1;
  double total = 0.0;
  for (const Arc& a : net.arcs()) total += a.capacity;
  // Any cut using a pinning arc exceeds every cut that does not.
  const double inf = 2.0 * total + 1.0;
  std::vector<Arc> arcs(net.arcs().begin(), net.arcs().end());
  for (NodeId v = 0; v < g.original_count(); ++v) {
    if (in[v]) {
      arcs.push_back({net.source(), v, inf});
    } else {
      arcs.push_back({v, net.sink(), inf});
    }
  }
  return max_flow_min_cut(FlowNetwork(net.node_count(), net.source(), net.sink(), arcs))
      .flow_value;
}

double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

ScbFunction random_scb(Rng& rng, int r, bool strict) {
  std::vector<double> inc(r);
  const bool coarse = !strict && uniform_int(rng, 0, 1) == 1;
  for (double& d : inc) {
    d = coarse ? 0.5 * uniform_int(rng, 0, 4) : uniform(rng, 0.05, 1.0);
  }
  std::sort(inc.rbegin(), inc.rend());
  if (strict) {
    for (int i = 1; i < r; ++i) {
      if (!(inc[i] < inc[i - 1])) inc[i] = inc[i - 1] * (1 - 1e-6);
    }
  }
  std::vector<double> w(r + 1, 0.0);
  for (int i = 1; i <= r; ++i) w[i] = w[i - 1] + inc[i - 1];
  return ScbFunction::create(std::move(w));
}

GscbFunction random_gscb(Rng& rng, int k) {
  const bool coarse = uniform_int(rng, 0, 2) == 0;
  std::vector<double> inc(k);
  for (double& d : inc) d = coarse ? 0.5 * uniform_int(rng, -4, 4) : uniform(rng, -2.0, 2.0);
  std::sort(inc.rbegin(), inc.rend());
  std::vector<double> w(k + 1);
  w[0] = uniform_int(rng, 0, 2) == 0 ? 0.0 : uniform(rng, 0.0, 2.0);
  for (int i = 1; i <= k; ++i) w[i] = w[i - 1] + inc[i - 1];
  const double low = *std::min_element(w.begin(), w.end());
  if (low < 0.0) {
    for (double& x : w) x = std::max(0.0, x - low);
  }
  return GscbFunction::create(std::move(w));
}

SplittingSpec random_catalog_spec(Rng& rng) {
  const double weight = uniform(rng, 0.5, 2.0);
  switch (uniform_int(rng, 0, 5)) {
    case 0: return SplittingSpec::clique(weight);
    case 1: return SplittingSpec::linear(weight);
    case 2: return SplittingSpec::delta_linear(uniform(rng, 1.0, 3.0), weight);
    case 3: return SplittingSpec::sqrt(weight);
    case 4: return SplittingSpec::power(uniform(rng, 0.1, 1.0), weight);
    default: return SplittingSpec::all_or_nothing(weight);
  }
}

namespace {

std::vector<NodeId> random_members(Rng& rng, int n, int size) {
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  for (int i = 0; i < size; ++i) std::swap(ids[i], ids[uniform_int(rng, i, n - 1)]);
  ids.resize(size);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

Hypergraph random_hypergraph(Rng& rng, int n, int max_edges, int min_size, int max_size) {
  Hypergraph h;
  h.n = static_cast<std::size_t>(n);
  const int edges = uniform_int(rng, 1, max_edges);
  for (int e = 0; e < edges; ++e) {
    const int size = uniform_int(rng, min_size, std::min(max_size, n));
    h.edges.push_back({random_members(rng, n, size), random_catalog_spec(rng)});
  }
  return h;
}

DsfmInstance random_dsfm(Rng& rng, int n, int max_components, int max_support) {
  DsfmInstance inst;
  inst.n = static_cast<std::size_t>(n);
  const int count = uniform_int(rng, 1, max_components);
  for (int c = 0; c < count; ++c) {
    const int size = uniform_int(rng, 1, std::min(max_support, n));
    auto members = random_members(rng, n, size);
    if (size >= 2 && uniform_int(rng, 0, 3) == 0) {
      inst.components.push_back({members, symmetric_to_gscb(random_catalog_spec(rng), size)});
    } else {
      inst.components.push_back({members, random_gscb(rng, size)});
    }
  }
  return inst;
}

std::vector<NodeId> random_subset(Rng& rng, std::size_t n) {
  std::vector<NodeId> set;
  for (NodeId v = 0; v < n; ++v) {
    if (rng() & 1) set.push_back(v);
  }
  return set;
}

bool run_verify_suite(std::uint64_t seed, std::ostream& out) {
  Rng rng(seed);
  bool all = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
    all = all && ok;
  };
  const double eps_values[] = {0.0, 0.1, 0.5, 1.0};

  {
    bool ok = true;
    double worst = 1.0;
    for (int t = 0; t < 20; ++t) {
      const Hypergraph h = random_hypergraph(rng, uniform_int(rng, 2, 8), 5, 2, 6);
      for (double eps : eps_values) {
        const auto rep = brute_cut_sandwich(h, build_sparsifier(h, eps), eps);
        ok = ok && rep.ok;
        if (eps == 1.0) worst = std::max(worst, rep.max_ratio);
      }
    }
    report("sandwich", ok, "max ratio at eps=1: " + std::to_string(worst));
  }
  {
    int mismatches = 0;
    for (int t = 0; t < 40; ++t) {
      const ScbFunction w = random_scb(rng, uniform_int(rng, 1, 12));
      const double eps = eps_values[t % 4];
      if (static_cast<int>(find_best_cover(w, eps).positive_slope_count()) != min_cover_size_dp(w, eps)) {
        ++mismatches;
      }
      const GscbFunction g = random_gscb(rng, uniform_int(rng, 1, 10));
      if (static_cast<int>(gscb_cover(g, eps).size()) != min_cover_size_dp(g, eps)) {
        ++mismatches;
      }
    }
    report("cover-optimality", mismatches == 0, std::to_string(mismatches) + " mismatches");
  }
  {
    int mismatches = 0;
    for (int t = 0; t < 40; ++t) {
      const int k = uniform_int(rng, 2, 6);
      const int j = uniform_int(rng, 1, 3);
      CcbParams cb;
      KcgParams acb{uniform(rng, 0, 1), uniform(rng, 0, 1), {}, {}};
      for (int g = 0; g < j; ++g) {
        cb.a.push_back(uniform(rng, 0.1, 2.0));
        cb.b.push_back(uniform(rng, 0.1, k / 2.0));
        acb.a.push_back(uniform(rng, 0.1, 2.0));
        acb.b.push_back(uniform(rng, 0.1, k - 0.1));
      }
      for (int i = 0; i <= k; ++i) {
        std::vector<bool> in(k, false);
        for (int v = 0; v < i; ++v) in[v] = true;
        const double cb_brute = brute_aux_mincut(expand_ccb(k, cb), in);
        const double acb_brute = brute_aux_mincut(expand_kcg(k, acb), in);
        if (std::abs(cb_brute - augmented_cut_cb(cb, k, i)) > 1e-9 * std::max(1.0, cb_brute)) {
          ++mismatches;
        }
        if (std::abs(acb_brute - augmented_cut_acb(acb, k, i)) >
            1e-9 * std::max(1.0, acb_brute)) {
          ++mismatches;
        }
      }
    }
    report("gadget-formulas", mismatches == 0, std::to_string(mismatches) + " mismatches");
  }
  {
    int failures = 0;
    for (int t = 0; t < 20; ++t) {
      const DsfmInstance inst = random_dsfm(rng, uniform_int(rng, 1, 10), 5, 6);
      const double opt = brute_min_f(inst).value;
      const double tol = 1e-9 * std::max(1.0, opt);
      if (std::abs(sparse_card(inst, 0.0).value - opt) > tol) ++failures;
      for (double eps : {0.1, 1.0}) {
        if (sparse_card(inst, eps).value > (1.0 + eps) * opt + tol) ++failures;
      }
    }
    report("dsfm", failures == 0, std::to_string(failures) + " failures");
  }
  {
    int failures = 0;
    for (int t = 0; t < 10; ++t) {
      const Hypergraph h = random_hypergraph(rng, uniform_int(rng, 2, 8), 3, 2, 5);
      const AugmentedGraph g = build_sparsifier(h, eps_values[t % 4]);
      for (int s = 0; s < 8; ++s) {
        const auto side = random_subset(rng, h.n);
        const double analytic = augmented_cut(g, side);
        if (std::abs(pinned_flow_cut(g, side) - analytic) > 1e-9 * std::max(1.0, analytic)) {
          ++failures;
        }
      }
    }
    report("flow-agreement", failures == 0, std::to_string(failures) + " failures");
  }
  return all;
}

}  // namespace augsparse::oracle

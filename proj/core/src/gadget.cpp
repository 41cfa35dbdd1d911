#include "augsparse/gadget.hpp"

#include <algorithm>

#include "augsparse/error.hpp"

namespace augsparse {

GraphFragment expand_ccb(std::uint32_t k, const CcbParams& p) {
  GraphFragment out;
  out.member_count = k;
  if (k < 2) return out;
  out.arcs.reserve(p.order() * (2 * k + 1));
  for (std::uint32_t j = 0; j < p.order(); ++j) {
    if (!(p.a[j] > 0.0) || !(p.b[j] > 0.0)) continue;
    const NodeRef in = NodeRef::auxiliary(out.aux_count++);
    const NodeRef out_node = NodeRef::auxiliary(out.aux_count++);
    for (std::uint32_t v = 0; v < k; ++v) {
      out.arcs.push_back({NodeRef::member(v), in, p.a[j]});
    }
    out.arcs.push_back({in, out_node, p.a[j] * p.b[j]});
    for (std::uint32_t v = 0; v < k; ++v) {
      out.arcs.push_back({out_node, NodeRef::member(v), p.a[j]});
    }
  }
  return out;
}

GraphFragment expand_kcg(std::uint32_t k, const KcgParams& p) {
  GraphFragment out;
  out.member_count = k;
  if (k == 0) return out;
  const double kk = static_cast<double>(k);
  for (std::uint32_t j = 0; j < p.order(); ++j) {
    const double up = p.a[j] * (kk - p.b[j]);
    const double down = p.a[j] * p.b[j];
    if (!(up > 0.0) || !(down > 0.0)) continue;
    const NodeRef aux = NodeRef::auxiliary(out.aux_count++);
    for (std::uint32_t v = 0; v < k; ++v) {
      out.arcs.push_back({NodeRef::member(v), aux, up});
      out.arcs.push_back({aux, NodeRef::member(v), down});
    }
  }
  if (p.z0 > 0.0) {
    for (std::uint32_t v = 0; v < k; ++v) {
      out.arcs.push_back({NodeRef::source(), NodeRef::member(v), p.z0});
    }
  }
  if (p.zk > 0.0) {
    for (std::uint32_t v = 0; v < k; ++v) {
      out.arcs.push_back({NodeRef::member(v), NodeRef::sink(), p.zk});
    }
  }
  return out;
}

double augmented_cut_cb(const CcbParams& p, int k, int i) {
  if (i < 0 || i > k) throw DomainError("augmented_cut_cb: need 0 <= i <= k");
  const double small = std::min(i, k - i);
  double total = 0.0;
  for (std::size_t j = 0; j < p.order(); ++j) total += p.a[j] * std::min(small, p.b[j]);
  return total;
}

double augmented_cut_acb(const KcgParams& p, int k, int i) {
  if (i < 0 || i > k) throw DomainError("augmented_cut_acb: need 0 <= i <= k");
  return kcg_evaluate(p, i, k);
}

}  // namespace augsparse

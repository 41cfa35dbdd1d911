#pragma once

// Concrete directed-graph fragments for CB- and ACB-gadget combinations.

#include <cstdint>
#include <span>
#include <vector>

#include "augsparse/plcover.hpp"

namespace augsparse {

using NodeId = std::uint32_t;

// Endpoint of a fragment arc. Member and auxiliary indices are local to the
// fragment; global ids are assigned when fragments are assembled.
struct NodeRef {
  enum class Kind : std::uint8_t { kMember, kAuxiliary, kSource, kSink };
  Kind kind = Kind::kMember;
  std::uint32_t index = 0;

  static NodeRef member(std::uint32_t i) { return {Kind::kMember, i}; }
  static NodeRef auxiliary(std::uint32_t i) { return {Kind::kAuxiliary, i}; }
  static NodeRef source() { return {Kind::kSource, 0}; }
  static NodeRef sink() { return {Kind::kSink, 0}; }
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct FragmentArc {
  NodeRef tail;
  NodeRef head;
  double capacity = 0.0;
};

struct GraphFragment {
  std::uint32_t member_count = 0;
  std::uint32_t aux_count = 0;
  std::vector<FragmentArc> arcs;
};

// Per gadget j: auxiliaries e'_j = 2j, e''_j = 2j + 1; arcs v -> e'_j and
// e''_j -> v of capacity a_j for every member v, and e'_j -> e''_j of
// capacity a_j b_j. Fragments for k < 2 are empty.
GraphFragment expand_ccb(std::uint32_t k, const CcbParams& p);

// Per gadget j: one auxiliary; v -> aux capacity a_j (k - b_j) and
// aux -> v capacity a_j b_j. Plus source -> v (z0) and v -> sink (zk) when
// those are positive.
GraphFragment expand_kcg(std::uint32_t k, const KcgParams& p);

// Sum_j a_j min{i, k - i, b_j}.
double augmented_cut_cb(const CcbParams& p, int k, int i);

// z0 (k - i) + zk i + Sum_j a_j min{i (k - b_j), (k - i) b_j}.
double augmented_cut_acb(const KcgParams& p, int k, int i);

}  // namespace augsparse

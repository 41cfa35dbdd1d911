#include <gtest/gtest.h>

#include <algorithm>

#include "augsparse/error.hpp"
#include "augsparse/gadget.hpp"
#include "augsparse/oracle.hpp"

namespace augsparse {
namespace {

std::vector<bool> first_in(int k, int i) {
  std::vector<bool> in(k, false);
  std::fill(in.begin(), in.begin() + i, true);
  return in;
}

std::size_t count_arcs(const GraphFragment& f, NodeRef::Kind tail, NodeRef::Kind head) {
  return std::count_if(f.arcs.begin(), f.arcs.end(), [&](const FragmentArc& a) {
    return a.tail.kind == tail && a.head.kind == head;
  });
}

TEST(ExpandCcb, SingleGadget) {
  const GraphFragment f = expand_ccb(3, CcbParams{{2}, {1}});
  EXPECT_EQ(f.aux_count, 2u);
  ASSERT_EQ(f.arcs.size(), 7u);
  const auto middle = std::find_if(f.arcs.begin(), f.arcs.end(), [](const FragmentArc& a) {
    return a.tail.kind == NodeRef::Kind::kAuxiliary && a.head.kind == NodeRef::Kind::kAuxiliary;
  });
  ASSERT_NE(middle, f.arcs.end());
  EXPECT_DOUBLE_EQ(middle->capacity, 2.0);
}

TEST(ExpandCcb, CountsFollowFormula) {
  EXPECT_TRUE(expand_ccb(5, CcbParams{}).arcs.empty());
  const GraphFragment f = expand_ccb(4, CcbParams{{2, 1}, {1, 2}});
  EXPECT_EQ(f.aux_count, 4u);
  EXPECT_EQ(f.arcs.size(), 18u);
  EXPECT_TRUE(expand_ccb(1, CcbParams{{2}, {1}}).arcs.empty());
}

TEST(ExpandKcg, SingleGadget) {
  const GraphFragment f = expand_kcg(4, KcgParams{0, 0, {1}, {1}});
  EXPECT_EQ(f.aux_count, 1u);
  ASSERT_EQ(f.arcs.size(), 8u);
  for (const FragmentArc& a : f.arcs) {
    if (a.head.kind == NodeRef::Kind::kAuxiliary) {
      EXPECT_DOUBLE_EQ(a.capacity, 3.0);
    }
    if (a.tail.kind == NodeRef::Kind::kAuxiliary) {
      EXPECT_DOUBLE_EQ(a.capacity, 1.0);
    }
  }
}

TEST(ExpandKcg, TerminalArcsOnly) {
  const GraphFragment f = expand_kcg(4, KcgParams{0.5, 0, {}, {}});
  EXPECT_EQ(f.aux_count, 0u);
  ASSERT_EQ(f.arcs.size(), 4u);
  EXPECT_EQ(count_arcs(f, NodeRef::Kind::kSource, NodeRef::Kind::kMember), 4u);
  for (const FragmentArc& a : f.arcs) EXPECT_DOUBLE_EQ(a.capacity, 0.5);
}

TEST(ExpandKcg, ArcCountFormula) {
  const GraphFragment f = expand_kcg(5, KcgParams{0.2, 0.3, {1, 2, 0.5}, {1, 2, 4}});
  EXPECT_EQ(f.aux_count, 3u);
  EXPECT_EQ(f.arcs.size(), 2u * 5 * 3 + 2 * 5);
  for (const FragmentArc& a : f.arcs) EXPECT_GT(a.capacity, 0.0);
}

TEST(AugmentedCutCb, Examples) {
  EXPECT_DOUBLE_EQ(augmented_cut_cb(CcbParams{{1}, {2}}, 10, 4), 2.0);
  EXPECT_DOUBLE_EQ(augmented_cut_cb(CcbParams{{1}, {2}}, 10, 0), 0.0);
  EXPECT_DOUBLE_EQ(augmented_cut_cb(CcbParams{{2, 1}, {1, 2}}, 4, 1), 3.0);
  EXPECT_THROW(augmented_cut_cb(CcbParams{{1}, {2}}, 4, 5), DomainError);
}

TEST(AugmentedCutAcb, Examples) {
  EXPECT_DOUBLE_EQ(augmented_cut_acb(KcgParams{0, 0, {1}, {2}}, 5, 1), 3.0);
  EXPECT_DOUBLE_EQ(augmented_cut_acb(KcgParams{1, 0, {}, {}}, 3, 3), 0.0);
}

TEST(BruteAuxMincut, SmallGadgets) {
  EXPECT_DOUBLE_EQ(oracle::brute_aux_mincut(expand_ccb(5, CcbParams{{1}, {2}}), first_in(5, 1)),
                   1.0);
  EXPECT_DOUBLE_EQ(
      oracle::brute_aux_mincut(expand_kcg(5, KcgParams{0, 0, {1}, {2}}), first_in(5, 1)), 3.0);
}

TEST(BruteAuxMincut, CombinedGadgetIsSumOfParts) {
  const CcbParams both{{1.5, 0.5}, {1, 3}};
  for (int i = 0; i <= 6; ++i) {
    const double parts =
        oracle::brute_aux_mincut(expand_ccb(6, CcbParams{{1.5}, {1}}), first_in(6, i)) +
        oracle::brute_aux_mincut(expand_ccb(6, CcbParams{{0.5}, {3}}), first_in(6, i));
    EXPECT_NEAR(oracle::brute_aux_mincut(expand_ccb(6, both), first_in(6, i)), parts, 1e-12);
  }
}

TEST(GadgetFormulas, MatchEnumerationOnRandomParams) {
  oracle::Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const int k = oracle::uniform_int(rng, 1, 6);
    const int j = oracle::uniform_int(rng, 1, 3);
    CcbParams cb;
    KcgParams acb{oracle::uniform(rng, 0, 1), oracle::uniform(rng, 0, 1), {}, {}};
    for (int g = 0; g < j; ++g) {
      cb.a.push_back(oracle::uniform(rng, 0.1, 3));
      cb.b.push_back(oracle::uniform(rng, 0.1, k));
      acb.a.push_back(oracle::uniform(rng, 0.1, 3));
      acb.b.push_back(oracle::uniform(rng, 0.05, k - 0.05));
    }
    for (int i = 0; i <= k; ++i) {
      // Members placed in a random order so the split is not always a prefix.
      std::vector<bool> in = first_in(k, i);
      for (int v = k - 1; v > 0; --v) std::swap(in[v], in[oracle::uniform_int(rng, 0, v)]);
      const double cb_brute = oracle::brute_aux_mincut(expand_ccb(k, cb), in);
      const double acb_brute = oracle::brute_aux_mincut(expand_kcg(k, acb), in);
      if (k >= 2) {
        EXPECT_NEAR(augmented_cut_cb(cb, k, i), cb_brute, 1e-9 * std::max(1.0, cb_brute));
      }
      EXPECT_NEAR(augmented_cut_acb(acb, k, i), acb_brute, 1e-9 * std::max(1.0, acb_brute));
    }
  }
}

}  // namespace
}  // namespace augsparse

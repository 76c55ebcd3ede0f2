#include <gtest/gtest.h>

#include "support.hpp"

using namespace symnet;
using namespace symnet::test;

TEST(Legality, FullyDirectedPath) {
  auto net = path3();
  auto l = classify_legality(net, pointers(net, {{0, 1}, {2, 1}}));
  EXPECT_EQ(l, (std::vector<Legality>{Legality::legal, Legality::legal, Legality::legal}));
}

TEST(Legality, ZeroPointersOnPath) {
  auto net = path3();
  auto l = classify_legality(net, pointers(net, {}));
  EXPECT_EQ(l[0], Legality::candidate);
  EXPECT_EQ(l[2], Legality::candidate);
  EXPECT_EQ(l[1], Legality::illegal);
}

TEST(Legality, ZeroPointersOnStar) {
  auto net = star(3);
  EXPECT_EQ(illegal_count(net, pointers(net, {})), 4u);
  EXPECT_EQ(illegal_count(net, pointers(net, {{1, 0}, {2, 0}, {3, 0}})), 0u);
}

TEST(Legality, ClockwiseRingNeverBecomesLegal) {
  // each unit has exactly one non-pointing neighbor, so all units are illegal candidates
  for (std::size_t n = 3; n <= 8; ++n) {
    auto preset = fixtures::illegal_ring(n);
    auto l = classify_legality(preset.net, preset.pointers);
    for (auto v : l) EXPECT_EQ(v, Legality::candidate);
    EXPECT_EQ(illegal_count(preset.net, preset.pointers), n);
  }
}

TEST(Legality, MutualPointersAreIllegal) {
  Network::Builder b(2);
  b.edge(0, 1, 1_w);
  auto net = std::move(b).build();
  auto l = classify_legality(net, pointers(net, {{0, 1}, {1, 0}}));
  // neither is legal; with no neighbor withholding a pointer both have the candidate shape
  EXPECT_EQ(l[0], Legality::candidate);
  EXPECT_EQ(l[1], Legality::candidate);
  EXPECT_EQ(classify_legality(net, pointers(net, {{0, 1}}), 0), Legality::legal);
}

TEST(Legality, IllegalSubtreeTaintsAncestors) {
  // path 0-1-2-3 with 3 pointing nowhere useful: 0->1->2 and 3 silent
  Network::Builder b(4);
  b.edge(0, 1, 1_w).edge(1, 2, 1_w).edge(2, 3, 1_w);
  auto net = std::move(b).build();
  auto l = classify_legality(net, pointers(net, {{0, 1}, {1, 2}}));
  EXPECT_EQ(l[0], Legality::legal);
  EXPECT_EQ(l[1], Legality::legal);
  EXPECT_EQ(l[2], Legality::candidate);  // root shape fails, 3 does not point
  EXPECT_EQ(l[3], Legality::candidate);
}

TEST(Legality, SnapshotShapeChecked) {
  auto net = path3();
  PointerSnapshot p(2);
  EXPECT_THROW(classify_legality(net, p), DimensionError);
}

// Every fully directed tree, rooted anywhere, is entirely legal.
TEST(LegalityProperty, DirectedTreesAreLegal) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::size_t n = 1 + seed % 15;
    auto net = random_network({TopologyKind::tree, n, 0, -5, 5, seed});
    auto parent = bfs_parents(net, seed % n);
    std::vector<std::pair<NodeId, NodeId>> arcs;
    for (NodeId i = 0; i < n; ++i)
      if (parent[i] != n) arcs.push_back({i, parent[i]});
    EXPECT_EQ(illegal_count(net, pointers(net, arcs)), 0u);
  }
}

// Legal units stay legal along fair-exclusion traces on trees, including from scrambled registers.
TEST(LegalityProperty, MonotoneUnderFairExclusion) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    std::size_t n = 2 + seed % 13;
    auto net = random_network({TopologyKind::tree, n, 0, -5, 5, seed});
    RunConfig cfg;
    cfg.rule = {RuleKind::activate};
    cfg.scheduler = {SchedulerKind::fair_exclusion, {}, seed};
    cfg.init = InitMode::preset;
    cfg.preset = perturb(net, make_zero_state(net), seed);
    LegalityAudit audit(net, *cfg.preset, 2 * n);
    auto out = run(net, cfg, std::ref(audit));
    EXPECT_TRUE(audit.monotone()) << seed;
    EXPECT_EQ(audit.final_illegal(), 0u) << seed;
    EXPECT_TRUE(out.result.stable);
  }
}

#include <gtest/gtest.h>

#include "support.hpp"

using namespace symnet;
using namespace symnet::test;

namespace {

std::vector<ActivationEvent> trace_of(Scheduler& s, std::size_t steps) {
  std::vector<ActivationEvent> out;
  for (std::size_t t = 0; t < steps; ++t) out.push_back({t, s.next_set()});
  return out;
}

}  // namespace

TEST(Scheduler, CentralRoundRobin) {
  Scheduler s(parse_scheduler_spec("central-rr"), 3);
  std::vector<NodeId> got;
  for (int k = 0; k < 5; ++k) got.push_back(s.next_set().at(0));
  EXPECT_EQ(got, (std::vector<NodeId>{0, 1, 2, 0, 1}));
  EXPECT_EQ(s.pass_length(), 3u);
}

TEST(Scheduler, CentralRoundRobinCustomOrder) {
  Scheduler s(parse_scheduler_spec("central-rr:3,1,2"), 3);
  std::vector<NodeId> got;
  for (int k = 0; k < 4; ++k) got.push_back(s.next_set().at(0));
  EXPECT_EQ(got, (std::vector<NodeId>{2, 0, 1, 2}));
  EXPECT_THROW(Scheduler(parse_scheduler_spec("central-rr:1,1,2"), 3), ConfigError);
  EXPECT_THROW(Scheduler(parse_scheduler_spec("central-rr:1,2"), 3), ConfigError);
}

TEST(Scheduler, SynchronousAll) {
  Scheduler s(parse_scheduler_spec("sync-all"), 5);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(s.next_set(), (ActivationSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(s.pass_length(), 1u);
}

TEST(Scheduler, ScriptedReplaysCyclically) {
  Scheduler s(parse_scheduler_spec("scripted:1,4,2,5,3,6"), 6);
  std::vector<NodeId> got;
  for (int k = 0; k < 8; ++k) got.push_back(s.next_set().at(0));
  EXPECT_EQ(got, (std::vector<NodeId>{0, 3, 1, 4, 2, 5, 0, 3}));
}

TEST(Scheduler, ConfigErrors) {
  EXPECT_THROW(Scheduler(parse_scheduler_spec("scripted:1,7"), 6), ConfigError);
  for (const char* bad : {"scripted", "scripted:", "scripted:0", "scripted:1,,2", "sync-all:1", "bogus", "fair-excl:2",
                          "central-random:3", "central-rr:a"})
    EXPECT_THROW(parse_scheduler_spec(bad), ConfigError) << bad;
  EXPECT_THROW(Scheduler(parse_scheduler_spec("central-rr"), 0), ConfigError);
}

TEST(Scheduler, SpecRoundTripsThroughText) {
  for (const char* text : {"central-rr", "central-rr:2,1,3", "central-random", "sync-all", "fair-excl", "scripted:1,4,2"})
    EXPECT_EQ(to_string(parse_scheduler_spec(text)), text);
  EXPECT_EQ(parse_scheduler_spec("fair-exclusion").kind, SchedulerKind::fair_exclusion);
  EXPECT_EQ(parse_scheduler_spec("synchronous-all").kind, SchedulerKind::synchronous_all);
}

TEST(Fairness, CentralTraceIsFair) {
  Scheduler s(parse_scheduler_spec("central-rr"), 3);
  auto trace = trace_of(s, 30);
  EXPECT_TRUE(check_fairness(trace, 3, 3));
  EXPECT_FALSE(check_fairness(trace, 3, 2));
  EXPECT_TRUE(check_fair_exclusion(trace, path3(), 3));
}

TEST(Fairness, MissingNodeIsUnfair) {
  std::vector<ActivationEvent> trace;
  for (std::size_t t = 0; t < 20; ++t) trace.push_back({t, {t % 2 == 0 ? NodeId{0} : NodeId{2}}});
  EXPECT_FALSE(check_fairness(trace, 3, 6));
  EXPECT_THROW(check_fairness({}, 3, 3), ArgumentError);
  EXPECT_THROW(check_fair_exclusion({}, path3(), 3), ArgumentError);
}

TEST(Fairness, SynchronousAllFailsExclusion) {
  auto net = fixtures::fig1();
  Scheduler s(parse_scheduler_spec("sync-all"), net.size());
  auto trace = trace_of(s, 50);
  EXPECT_TRUE(check_fairness(trace, net.size(), 1));
  EXPECT_FALSE(check_fair_exclusion(trace, net, 50));
}

TEST(Fairness, CentralRandomWithinTwoBlocks) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Scheduler s(parse_scheduler_spec("central-random", seed), 7);
    auto trace = trace_of(s, 140);
    for (const auto& e : trace) EXPECT_EQ(e.nodes.size(), 1u);
    EXPECT_TRUE(check_fairness(trace, 7, s.fairness_window()));
  }
}

// Bit-identical replays for equal (kind, seed, n).
TEST(SchedulerProperty, ReplaysAreIdentical) {
  for (const char* kind : {"central-rr", "central-random", "sync-all", "fair-excl", "scripted:2,1,3"})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Scheduler a(parse_scheduler_spec(kind, seed), 6), b(parse_scheduler_spec(kind, seed), 6);
      for (int t = 0; t < 200; ++t) EXPECT_EQ(a.next_set(), b.next_set());
    }
}

// Fair-exclusion traces pass both checkers with window 2n and hold every singleton in every 2n span.
TEST(SchedulerProperty, FairExclusionWindows) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::size_t n = 2 + seed % 12;
    auto net = random_network({TopologyKind::sparse, n, std::min<std::size_t>(seed % 3, n * (n - 1) / 2 - (n - 1)),
                               -5, 5, seed});
    Scheduler s(parse_scheduler_spec("fair-excl", seed), n);
    auto trace = trace_of(s, 10 * n);
    EXPECT_TRUE(check_fairness(trace, n, 2 * n));
    EXPECT_TRUE(check_fair_exclusion(trace, net, 2 * n));
    for (std::size_t start = 0; start + 2 * n <= trace.size(); ++start) {
      std::vector<std::uint8_t> alone(n, 0);
      for (std::size_t t = start; t < start + 2 * n; ++t)
        if (trace[t].nodes.size() == 1) alone[trace[t].nodes[0]] = 1;
      EXPECT_EQ(std::count(alone.begin(), alone.end(), 1), static_cast<long>(n));
    }
    bool some_multi = false;
    for (const auto& e : trace) {
      EXPECT_FALSE(e.nodes.empty());
      EXPECT_TRUE(std::is_sorted(e.nodes.begin(), e.nodes.end()));
      some_multi = some_multi || e.nodes.size() > 1;
    }
    EXPECT_TRUE(some_multi);
  }
}

TEST(SchedulerProperty, CentralKindsEmitSingletons) {
  for (const char* kind : {"central-rr", "central-random", "scripted:3,1"}) {
    Scheduler s(parse_scheduler_spec(kind, 4), 5);
    for (int t = 0; t < 50; ++t) {
      auto set = s.next_set();
      ASSERT_EQ(set.size(), 1u);
      EXPECT_LT(set[0], 5u);
    }
  }
}

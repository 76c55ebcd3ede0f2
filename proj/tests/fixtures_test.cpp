#include <gtest/gtest.h>

#include "support.hpp"

using namespace symnet;
using namespace symnet::test;

TEST(Fixtures, Fig1Shape) {
  auto net = fixtures::fig1();
  EXPECT_EQ(net.size(), 5u);
  EXPECT_EQ(net.edges().size(), 4u);
  EXPECT_EQ(net.weight_between(1, 2), 3_w);
  EXPECT_EQ(net.weight_between(0, 2), -1_w);
  EXPECT_EQ(net.weight_between(2, 3), 2_w);
  EXPECT_EQ(net.weight_between(3, 4), -2_w);
  EXPECT_EQ(net.biases(), (std::vector<Weight>{2_w, -1_w, -3_w, 0_w, 1_w}));
}

TEST(Fixtures, Fig1OracleArgmax) {
  auto rep = brute_force_optima(fixtures::fig1());
  EXPECT_EQ(rep.gmax, 3_w);
  ASSERT_EQ(rep.argmax.size(), 1u);
  EXPECT_EQ(to_bitstring(rep.argmax[0]), "10001");
  EXPECT_EQ(rep.states_scanned, 32u);
}

TEST(Fixtures, Example51Shape) {
  auto net = fixtures::example51();
  EXPECT_EQ(net.weight_between(0, 1), -50_w);
  EXPECT_EQ(net.weight_between(1, 2), 200_w);
  EXPECT_EQ(net.weight_between(0, 2), 100_w);
  EXPECT_EQ(net.weight_between(0, 3), 3_w);
  EXPECT_EQ(net.weight_between(3, 4), 3_w);
  EXPECT_EQ(net.weight_between(0, 4), 3_w);
  EXPECT_EQ(net.biases(), (std::vector<Weight>{-0.1_w, -0.1_w, -0.1_w, -4_w, -4_w}));
}

TEST(Fixtures, Chain2iOptimaSplitTheMiddle) {
  auto rep = brute_force_optima(fixtures::chain2i(3));
  std::vector<std::string> got;
  for (const auto& a : rep.argmax) got.push_back(to_bitstring(a));
  EXPECT_EQ(got, (std::vector<std::string>{"110111", "111011"}));
  for (std::size_t i = 2; i <= 8; ++i) {
    auto net = fixtures::chain2i(i);
    EXPECT_EQ(net.size(), 2 * i);
    auto opt = brute_force_optima(net);
    ASSERT_EQ(opt.argmax.size(), 2u) << i;
    for (const auto& a : opt.argmax) EXPECT_NE(a[i - 1], a[i]);
    // mirror symmetry
    for (const auto& e : net.edges())
      EXPECT_EQ(net.weight_between(2 * i - 1 - e.a, 2 * i - 1 - e.b), e.weight);
  }
}

TEST(Fixtures, Ring6OptimaAlternate) {
  auto rep = brute_force_optima(fixtures::ring6());
  EXPECT_EQ(rep.gmax, 3_w);
  ASSERT_EQ(rep.argmax.size(), 2u);
  EXPECT_EQ(to_bitstring(rep.argmax[0]), "010101");
  EXPECT_EQ(to_bitstring(rep.argmax[1]), "101010");
}

TEST(Fixtures, IllegalRingIsFixedByDirecting) {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto preset = fixtures::illegal_ring(n);
    SimState s = make_zero_state(preset.net);
    for (NodeId i = 0; i < n; ++i) s.regs[i].parent = preset.pointers[i];
    for (NodeId i = 0; i < n; ++i)
      EXPECT_EQ(tree_direct_step(make_view(preset.net, s, {}, i)), preset.pointers[i]);
  }
}

TEST(Fixtures, ArgumentErrors) {
  EXPECT_THROW(fixtures::chain2i(1), ArgumentError);
  EXPECT_THROW(fixtures::illegal_ring(2), ArgumentError);
  EXPECT_THROW(fixtures::by_name("nope"), ArgumentError);
  EXPECT_THROW(fixtures::by_name("chain2i:x"), ArgumentError);
}

TEST(Fixtures, ByName) {
  EXPECT_TRUE(fixtures::by_name("fig1") == fixtures::fig1());
  EXPECT_TRUE(fixtures::by_name("chain2i") == fixtures::chain2i(3));
  EXPECT_TRUE(fixtures::by_name("chain2i:5") == fixtures::chain2i(5));
  EXPECT_EQ(fixtures::by_name("illegal_ring:7").size(), 7u);
}

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/network.hpp"
#include "symnet/random.hpp"
#include "symnet/weight.hpp"

namespace symnet {

// Shared register of one unit. Written only by its owner, read by its neighbors.
struct ActivationRegister {
  bool x = false;
  Weight g0;
  Weight g1;
  std::vector<std::uint8_t> parent;             // P_i^j per neighbor position
  std::optional<std::vector<Weight>> cutset_g1;  // G_i^{j1} per neighbor; cutset units only

  friend bool operator==(const ActivationRegister&, const ActivationRegister&) = default;
};

// What unit i may read: its own register plus each neighbor's published fields.
struct NeighborView {
  NodeId id;
  Weight weight;
  bool x;
  Weight g0;
  Weight g1;  // a cutset neighbor publishes its per-neighbor value G_j^{i1} here
  bool points_to_me;
  bool is_cutset;
};

struct LocalView {
  NodeId id;
  Weight bias;
  bool is_cutset;
  bool x;
  std::vector<std::uint8_t> pointers;  // own P_i^j, aligned with neighbors
  std::vector<NeighborView> neighbors;
};

enum class NodeRole { leaf, root, internal, non_tree, cutset };

inline const char* to_string(NodeRole r) {
  switch (r) {
    case NodeRole::leaf: return "leaf";
    case NodeRole::root: return "root";
    case NodeRole::internal: return "internal";
    case NodeRole::non_tree: return "non-tree";
    case NodeRole::cutset: return "cutset";
  }
  return "?";
}

struct GoodnessPair {
  Weight g0;
  Weight g1;
  friend bool operator==(const GoodnessPair&, const GoodnessPair&) = default;
};

struct CutsetGoodness {
  Weight g0;
  std::vector<Weight> toward;  // G_i^{j1}, aligned with neighbors
};

inline std::size_t non_pointing_count(const LocalView& v) {
  std::size_t count = 0;
  for (const auto& nb : v.neighbors) count += !nb.points_to_me;
  return count;
}

// Part of a tree: a regular unit with at most one neighbor not pointing at it.
inline bool on_tree(const LocalView& v) { return !v.is_cutset && non_pointing_count(v) <= 1; }

inline NodeRole classify_role(const LocalView& v) {
  if (v.is_cutset) return NodeRole::cutset;
  if (v.neighbors.size() == 1) return NodeRole::leaf;
  switch (non_pointing_count(v)) {
    case 0: return NodeRole::root;
    case 1: return NodeRole::internal;
    default: return NodeRole::non_tree;
  }
}

// Tree directing. A regular unit adopts its single non-pointing neighbor as parent,
// otherwise clears every pointer (root or outside any tree). A cutset unit points at
// every neighbor that does not point at it. Pointer initialization is the caller's job.
inline std::vector<std::uint8_t> tree_direct_step(const LocalView& v) {
  std::vector<std::uint8_t> p(v.neighbors.size(), 0);
  if (v.is_cutset) {
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = !v.neighbors[k].points_to_me;
    return p;
  }
  if (non_pointing_count(v) == 1)
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = !v.neighbors[k].points_to_me;
  return p;
}

// G_i^0 = max{sum G_j^0, sum G_j^1 + theta_i}
// G_i^1 = max{sum G_j^0, sum G_j^1 + w_ik + theta_i}
// over children j (neighbors pointing at i), k the parent selected in v.pointers.
inline GoodnessPair goodness_step(const LocalView& v) {
  Weight sum0, sum1, link;
  for (std::size_t k = 0; k < v.neighbors.size(); ++k) {
    const auto& nb = v.neighbors[k];
    if (nb.points_to_me) {
      sum0 += nb.g0;
      sum1 += nb.g1;
    }
    if (v.pointers[k]) link += nb.weight;
  }
  return {max(sum0, sum1 + v.bias), max(sum0, sum1 + link + v.bias)};
}

// G_i^0 = X_i theta_i, G_i^{j1} = X_i (theta_i + w_ij), from the unit's current X.
inline CutsetGoodness cutset_goodness_step(const LocalView& v) {
  CutsetGoodness out;
  out.g0 = v.x ? v.bias : Weight{};
  out.toward.reserve(v.neighbors.size());
  for (const auto& nb : v.neighbors) out.toward.push_back(v.x ? v.bias + nb.weight : Weight{});
  return out;
}

inline Weight hopfield_input(const LocalView& v) {
  Weight sum;
  for (const auto& nb : v.neighbors)
    if (nb.x) sum += nb.weight;
  return sum;
}

// X_i = 1 iff sum_j w_ij X_j >= -theta_i.
inline bool hopfield_step(const LocalView& v) { return hopfield_input(v) >= -v.bias; }

// Tree units: X_i = 1 iff sum_j ((G_j^1 - G_j^0) P_j^i + w_ij X_j P_i^j) >= -theta_i.
// Cutset units and units outside any tree fall back to the Hopfield rule.
inline bool activation_step(const LocalView& v) {
  if (!on_tree(v)) return hopfield_step(v);
  Weight sum;
  for (std::size_t k = 0; k < v.neighbors.size(); ++k) {
    const auto& nb = v.neighbors[k];
    if (nb.points_to_me) sum += nb.g1 - nb.g0;
    if (v.pointers[k] && nb.x) sum += nb.weight;
  }
  return sum >= -v.bias;
}

// P(X_i = 1) = 1 / (1 + exp(-(sum_j w_ij X_j + theta_i) / T)).
inline double boltzmann_probability(Weight net_input, Weight temperature) {
  if (temperature <= Weight{}) throw ArgumentError("temperature must be positive");
  return 1.0 / (1.0 + std::exp(-net_input.to_double() / temperature.to_double()));
}

inline bool boltzmann_step(const LocalView& v, Weight temperature, Rng& rng) {
  const double p = boltzmann_probability(hopfield_input(v) + v.bias, temperature);
  return uniform_unit(rng) < p;
}

}  // namespace symnet

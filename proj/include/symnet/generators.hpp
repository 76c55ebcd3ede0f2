#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/network.hpp"
#include "symnet/random.hpp"

namespace symnet {

enum class TopologyKind { tree, chain, ring, sparse };

struct RandomNetworkSpec {
  TopologyKind kind = TopologyKind::tree;
  std::size_t nodes = 8;
  std::size_t extra_edges = 0;  // sparse only
  std::int64_t lo = -5;         // integer weights and biases drawn from [lo, hi]
  std::int64_t hi = 5;
  std::uint64_t seed = 1;
};

// tree: random labelled tree; chain: path 1-2-..-n in id order; ring: cycle in id order;
// sparse: random tree plus extra_edges distinct non-tree edges.
inline Network random_network(const RandomNetworkSpec& spec) {
  const std::size_t n = spec.nodes;
  if (n == 0) throw ArgumentError("random_network needs n >= 1");
  if (spec.lo > spec.hi) throw ArgumentError("empty weight range");
  if (spec.kind == TopologyKind::ring && n < 3) throw ArgumentError("ring needs n >= 3");
  if (spec.kind == TopologyKind::sparse) {
    const std::size_t room = n * (n - 1) / 2 - (n - 1);
    if (spec.extra_edges > room)
      throw ArgumentError("cannot add " + std::to_string(spec.extra_edges) + " extra edges to " +
                          std::to_string(n) + " nodes");
  } else if (spec.extra_edges != 0) {
    throw ArgumentError("extra edges apply only to sparse networks");
  }

  Rng rng(spec.seed);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  switch (spec.kind) {
    case TopologyKind::chain:
      for (NodeId k = 0; k + 1 < n; ++k) pairs.emplace_back(k, k + 1);
      break;
    case TopologyKind::ring:
      for (NodeId k = 0; k < n; ++k) pairs.emplace_back(k, (k + 1) % n);
      break;
    case TopologyKind::tree:
    case TopologyKind::sparse: {
      std::vector<NodeId> label(n);
      std::iota(label.begin(), label.end(), NodeId{0});
      for (std::size_t k = n; k > 1; --k) std::swap(label[k - 1], label[uniform_below(rng, k)]);
      for (NodeId k = 1; k < n; ++k) pairs.emplace_back(label[uniform_below(rng, k)], label[k]);
      break;
    }
  }

  Network::Builder b(n);
  auto draw = [&] { return Weight::from_int(uniform_between(rng, spec.lo, spec.hi)); };
  for (auto [i, j] : pairs) b.edge(i, j, draw());
  for (std::size_t added = 0; added < spec.extra_edges;) {
    NodeId i = uniform_below(rng, n), j = uniform_below(rng, n);
    if (i == j || b.has_edge(i, j)) continue;
    b.edge(i, j, draw());
    ++added;
  }
  for (NodeId i = 0; i < n; ++i) b.bias(i, draw());
  return std::move(b).build();
}

}  // namespace symnet

#pragma once

#include <cstdint>
#include <vector>

#include "symnet/symnet.hpp"

namespace symnet::test {

using namespace symnet::literals;

inline Network path3() {
  Network::Builder b(3);
  b.edge(0, 1, 1_w).edge(1, 2, 1_w);
  return std::move(b).build();
}

inline Network star(std::size_t leaves) {
  Network::Builder b(leaves + 1);
  for (NodeId k = 1; k <= leaves; ++k) b.edge(0, k, 1_w);
  return std::move(b).build();
}

// Pointer snapshot where every listed (from, to) pair is set.
inline PointerSnapshot pointers(const Network& net, const std::vector<std::pair<NodeId, NodeId>>& arcs) {
  PointerSnapshot p(net.size());
  for (NodeId i = 0; i < net.size(); ++i) p[i].assign(net.degree(i), 0);
  for (auto [a, b] : arcs) p[a][*net.neighbor_index(a, b)] = 1;
  return p;
}

inline NeighborView nb(NodeId id, Weight w, bool x = false, Weight g0 = {}, Weight g1 = {}, bool points = false,
                       bool cut = false) {
  return {id, w, x, g0, g1, points, cut};
}

inline LocalView view(Weight bias, std::vector<NeighborView> nbs, std::vector<std::uint8_t> own = {},
                      bool cut = false, bool x = false) {
  if (own.empty()) own.assign(nbs.size(), 0);
  return {0, bias, cut, x, std::move(own), std::move(nbs)};
}

inline std::vector<Assignment> all_assignments(std::size_t n) {
  std::vector<Assignment> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (code >> i) & 1;
    out.push_back(a);
  }
  return out;
}

// Fully directed tree rooted at `root`: every non-root unit points at its BFS parent.
inline std::vector<NodeId> bfs_parents(const Network& net, NodeId root) {
  std::vector<NodeId> parent(net.size(), net.size());
  std::vector<std::uint8_t> seen(net.size(), 0);
  std::vector<NodeId> queue{root};
  seen[root] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& e : net.neighbors(queue[h]))
      if (!seen[e.node]) {
        seen[e.node] = 1;
        parent[e.node] = queue[h];
        queue.push_back(e.node);
      }
  return parent;
}

}  // namespace symnet::test

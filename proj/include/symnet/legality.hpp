#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/network.hpp"

namespace symnet {

enum class Legality { legal, candidate, illegal };

inline const char* to_string(Legality l) {
  switch (l) {
    case Legality::legal: return "legal";
    case Legality::candidate: return "candidate";
    case Legality::illegal: return "illegal";
  }
  return "?";
}

namespace detail {

inline void check_snapshot(const Network& net, const PointerSnapshot& p) {
  if (p.size() != net.size()) throw DimensionError("pointer snapshot size mismatch");
  for (NodeId i = 0; i < net.size(); ++i)
    if (p[i].size() != net.degree(i)) throw DimensionError("pointer row size mismatch");
}

}  // namespace detail

// Legal units form the least fixed point of:
//   root:         points nowhere, every neighbor points at it and is legal;
//   intermediate: points at exactly one neighbor k, k does not point back, every other
//                 neighbor points at it and is legal.
// A candidate is an illegal unit with at most one neighbor not pointing at it.
// Evaluated bottom-up like a topological peel, so pointer cycles never become legal.
inline std::vector<Legality> classify_legality(const Network& net, const PointerSnapshot& p) {
  detail::check_snapshot(net, p);
  const std::size_t n = net.size();
  std::vector<std::uint8_t> shaped(n, 0);      // local conditions hold
  std::vector<std::size_t> pending(n, 0);      // children not yet legal
  std::vector<std::optional<NodeId>> parent(n);
  std::vector<std::size_t> non_pointing(n, 0);

  for (NodeId i = 0; i < n; ++i) {
    auto nbs = net.neighbors(i);
    std::size_t out = 0;
    std::optional<std::size_t> out_k;
    for (std::size_t k = 0; k < nbs.size(); ++k) {
      if (p[i][k]) {
        ++out;
        out_k = k;
      }
      if (!p[nbs[k].node][nbs[k].back]) ++non_pointing[i];
    }
    if (out == 0) {
      shaped[i] = non_pointing[i] == 0;
    } else if (out == 1) {
      const auto& par = nbs[*out_k];
      bool parent_points_back = p[par.node][par.back] != 0;
      shaped[i] = !parent_points_back && non_pointing[i] == 1;
      parent[i] = par.node;
    }
    if (shaped[i]) pending[i] = nbs.size() - (parent[i] ? 1 : 0);
  }

  std::vector<std::uint8_t> legal(n, 0);
  std::vector<NodeId> ready;
  for (NodeId i = 0; i < n; ++i)
    if (shaped[i] && pending[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    NodeId i = ready.back();
    ready.pop_back();
    legal[i] = 1;
    // i is a child of every neighbor it points at only if that neighbor is shaped with i as child.
    if (parent[i]) {
      NodeId k = *parent[i];
      if (shaped[k] && parent[k] != i && --pending[k] == 0) ready.push_back(k);
    }
  }

  std::vector<Legality> out(n, Legality::illegal);
  for (NodeId i = 0; i < n; ++i) {
    if (legal[i]) out[i] = Legality::legal;
    else if (non_pointing[i] <= 1) out[i] = Legality::candidate;
  }
  return out;
}

inline Legality classify_legality(const Network& net, const PointerSnapshot& p, NodeId i) {
  return classify_legality(net, p).at(i);
}

inline std::size_t illegal_count(const Network& net, const PointerSnapshot& p) {
  std::size_t count = 0;
  for (auto l : classify_legality(net, p)) count += l != Legality::legal;
  return count;
}

}  // namespace symnet

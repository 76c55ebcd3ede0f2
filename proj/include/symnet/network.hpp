#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/weight.hpp"

namespace symnet {

// Nodes are 0-based in the API; text formats and printed output use 1-based ids.
using NodeId = std::size_t;

// One activation bit per node.
using Assignment = std::vector<std::uint8_t>;

// P_i^j bits, indexed [node][position in that node's neighbor list].
using PointerSnapshot = std::vector<std::vector<std::uint8_t>>;

struct Edge {
  NodeId a;  // a < b
  NodeId b;
  Weight weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  Weight weight;
  std::size_t back;  // position of the owning node inside node's own neighbor list
};

// Symmetric weighted graph with per-node bias. Immutable once built.
class Network {
 public:
  class Builder;

  std::size_t size() const noexcept { return biases_.size(); }
  Weight bias(NodeId i) const { return biases_.at(i); }
  const std::vector<Weight>& biases() const noexcept { return biases_; }
  std::span<const Neighbor> neighbors(NodeId i) const { return adjacency_.at(i); }
  std::size_t degree(NodeId i) const { return adjacency_.at(i).size(); }
  // Sorted by (a, b).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Cutset declared alongside the network (file `cutset` line); sorted.
  const std::optional<std::vector<NodeId>>& declared_cutset() const noexcept { return cutset_; }

  std::optional<std::size_t> neighbor_index(NodeId i, NodeId j) const {
    const auto& adj = adjacency_.at(i);
    auto it = std::lower_bound(adj.begin(), adj.end(), j,
                               [](const Neighbor& n, NodeId id) { return n.node < id; });
    if (it == adj.end() || it->node != j) return std::nullopt;
    return static_cast<std::size_t>(it - adj.begin());
  }

  std::optional<Weight> weight_between(NodeId i, NodeId j) const {
    auto k = neighbor_index(i, j);
    if (!k) return std::nullopt;
    return adjacency_[i][*k].weight;
  }

  // Same graph and biases, different cutset declaration.
  Network with_cutset(std::optional<std::vector<NodeId>> cutset) const;

  friend bool operator==(const Network& x, const Network& y) {
    return x.biases_ == y.biases_ && x.edges_ == y.edges_ && x.cutset_ == y.cutset_;
  }

 private:
  Network() = default;
  std::vector<Weight> biases_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Edge> edges_;
  std::optional<std::vector<NodeId>> cutset_;
};

class Network::Builder {
 public:
  explicit Builder(std::size_t n) : biases_(n) {
    if (n == 0) throw ArgumentError("network needs at least one node");
  }

  std::size_t size() const noexcept { return biases_.size(); }

  Builder& bias(NodeId i, Weight theta) {
    check_node(i);
    biases_[i] = theta;
    return *this;
  }

  Builder& edge(NodeId i, NodeId j, Weight w) {
    check_node(i);
    check_node(j);
    if (i == j) throw ArgumentError("self-loop on node " + std::to_string(i + 1));
    Edge e{std::min(i, j), std::max(i, j), w};
    for (const auto& other : edges_)
      if (other.a == e.a && other.b == e.b)
        throw ArgumentError("duplicate edge " + std::to_string(e.a + 1) + " " + std::to_string(e.b + 1));
    edges_.push_back(e);
    return *this;
  }

  bool has_edge(NodeId i, NodeId j) const {
    auto a = std::min(i, j), b = std::max(i, j);
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.a == a && e.b == b; });
  }

  Builder& cutset(std::vector<NodeId> members) {
    for (NodeId c : members) check_node(c);
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw ArgumentError("duplicate cutset member");
    cutset_ = std::move(members);
    return *this;
  }

  Network build() && {
    Network net;
    const std::size_t n = biases_.size();
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    net.adjacency_.assign(n, {});
    for (const auto& e : edges_) {
      net.adjacency_[e.a].push_back({e.b, e.weight, 0});
      net.adjacency_[e.b].push_back({e.a, e.weight, 0});
    }
    for (auto& adj : net.adjacency_)
      std::sort(adj.begin(), adj.end(), [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
    net.biases_ = std::move(biases_);
    net.edges_ = std::move(edges_);
    net.cutset_ = std::move(cutset_);
    for (NodeId i = 0; i < n; ++i)
      for (auto& nb : net.adjacency_[i]) nb.back = *net.neighbor_index(nb.node, i);
    return net;
  }

 private:
  void check_node(NodeId i) const {
    if (i >= biases_.size())
      throw ArgumentError("node id " + std::to_string(i + 1) + " out of range 1.." + std::to_string(biases_.size()));
  }

  std::vector<Weight> biases_;
  std::vector<Edge> edges_;
  std::optional<std::vector<NodeId>> cutset_;
};

inline Network Network::with_cutset(std::optional<std::vector<NodeId>> cutset) const {
  Network copy = *this;
  if (cutset) {
    for (NodeId c : *cutset)
      if (c >= size()) throw ArgumentError("cutset node " + std::to_string(c + 1) + " out of range");
    std::sort(cutset->begin(), cutset->end());
    cutset->erase(std::unique(cutset->begin(), cutset->end()), cutset->end());
  }
  copy.cutset_ = std::move(cutset);
  return copy;
}

inline void check_dimension(const Network& net, const Assignment& a) {
  if (a.size() != net.size())
    throw DimensionError("assignment has " + std::to_string(a.size()) + " bits, network has " +
                         std::to_string(net.size()) + " nodes");
}

// G(X) = sum_{i<j} w_ij X_i X_j + sum_i theta_i X_i, exactly.
inline Weight goodness(const Network& net, const Assignment& a) {
  check_dimension(net, a);
  Weight g;
  for (const auto& e : net.edges())
    if (a[e.a] && a[e.b]) g += e.weight;
  for (NodeId i = 0; i < net.size(); ++i)
    if (a[i]) g += net.bias(i);
  return g;
}

inline Weight energy(const Network& net, const Assignment& a) { return -goodness(net, a); }

inline std::string to_bitstring(const Assignment& a) {
  std::string s;
  s.reserve(a.size());
  for (auto bit : a) s += bit ? '1' : '0';
  return s;
}

inline Assignment parse_bitstring(std::string_view bits) {
  Assignment a;
  a.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ArgumentError("bitstring may contain only 0 and 1");
    a.push_back(c == '1');
  }
  return a;
}

// Number of independent cycles: |E| - |V| + components.
inline std::size_t cyclomatic_number(const Network& net) {
  std::vector<NodeId> parent(net.size());
  for (NodeId i = 0; i < net.size(); ++i) parent[i] = i;
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = net.size();
  for (const auto& e : net.edges()) {
    auto ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return net.edges().size() + components - net.size();
}

}  // namespace symnet

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/network.hpp"

namespace symnet {

struct OptimumReport {
  Weight gmax;
  std::vector<Assignment> argmax;  // sorted lexicographically by node id
  std::uint64_t states_scanned = 0;
};

struct CutsetPlan {
  std::vector<NodeId> members;  // sorted
  bool acyclic_after_removal = false;
};

inline constexpr std::size_t kBruteForceLimit = 26;
inline constexpr std::size_t kLocalOptimaLimit = 22;
inline constexpr std::size_t kCutsetEnumerationLimit = 20;

namespace detail {

inline bool forest_without(const Network& net, const std::vector<std::uint8_t>& removed) {
  std::vector<NodeId> parent(net.size());
  for (NodeId i = 0; i < net.size(); ++i) parent[i] = i;
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : net.edges()) {
    if (removed[e.a] || removed[e.b]) continue;
    auto ra = find(e.a), rb = find(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

// Walks the free units in reflected Gray-code order, keeping per-unit input sums, and calls
// visit(assignment, goodness, inputs) once per state, starting from `base`.
template <typename Visit>
void gray_scan(const Network& net, Assignment base, const std::vector<NodeId>& free, Visit&& visit) {
  const std::size_t n = net.size();
  std::vector<Weight> input(n);
  for (const auto& e : net.edges()) {
    if (base[e.b]) input[e.a] += e.weight;
    if (base[e.a]) input[e.b] += e.weight;
  }
  Weight g = goodness(net, base);
  visit(base, g, input);
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t k = 1; k < total; ++k) {
    const NodeId i = free[static_cast<std::size_t>(__builtin_ctzll(k))];
    const Weight gain = net.bias(i) + input[i];
    const bool on = !base[i];
    base[i] = on;
    if (on) g += gain;
    else g -= gain;
    for (const auto& nb : net.neighbors(i)) {
      if (on) input[nb.node] += nb.weight;
      else input[nb.node] -= nb.weight;
    }
    visit(base, g, input);
  }
}

inline OptimumReport best_of_scan(const Network& net, Assignment base, const std::vector<NodeId>& free) {
  OptimumReport rep;
  bool first = true;
  gray_scan(net, std::move(base), free, [&](const Assignment& a, Weight g, const std::vector<Weight>&) {
    if (first || g > rep.gmax) {
      rep.gmax = g;
      rep.argmax.clear();
      first = false;
    }
    if (g == rep.gmax) rep.argmax.push_back(a);
  });
  rep.states_scanned = std::uint64_t{1} << free.size();
  std::sort(rep.argmax.begin(), rep.argmax.end());
  return rep;
}

}  // namespace detail

// Exhaustive maximum of G over all 2^n assignments, with the complete argmax set.
inline OptimumReport brute_force_optima(const Network& net) {
  if (net.size() > kBruteForceLimit)
    throw SizeError("brute force limited to " + std::to_string(kBruteForceLimit) + " units");
  std::vector<NodeId> all(net.size());
  for (NodeId i = 0; i < net.size(); ++i) all[i] = i;
  return detail::best_of_scan(net, Assignment(net.size(), 0), all);
}

inline bool is_hopfield_stable(const Network& net, const Assignment& a) {
  check_dimension(net, a);
  for (NodeId i = 0; i < net.size(); ++i) {
    Weight input;
    for (const auto& nb : net.neighbors(i))
      if (a[nb.node]) input += nb.weight;
    if ((input >= -net.bias(i)) != (a[i] != 0)) return false;
  }
  return true;
}

// Every assignment that is a fixed point of the Hopfield rule (ties resolve to 1), sorted.
inline std::vector<Assignment> hopfield_local_optima(const Network& net) {
  if (net.size() > kLocalOptimaLimit)
    throw SizeError("local optimum scan limited to " + std::to_string(kLocalOptimaLimit) + " units");
  std::vector<NodeId> all(net.size());
  for (NodeId i = 0; i < net.size(); ++i) all[i] = i;
  std::vector<Assignment> out;
  detail::gray_scan(net, Assignment(net.size(), 0), all,
                    [&](const Assignment& a, Weight, const std::vector<Weight>& input) {
                      for (NodeId i = 0; i < net.size(); ++i)
                        if ((input[i] >= -net.bias(i)) != (a[i] != 0)) return;
                      out.push_back(a);
                    });
  std::sort(out.begin(), out.end());
  return out;
}

inline CutsetPlan make_cutset_plan(const Network& net, std::vector<NodeId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::uint8_t> removed(net.size(), 0);
  for (NodeId c : members) {
    if (c >= net.size()) throw ArgumentError("cutset member " + std::to_string(c + 1) + " out of range");
    removed[c] = 1;
  }
  return {std::move(members), detail::forest_without(net, removed)};
}

namespace detail {

inline Assignment pin(const Network& net, const CutsetPlan& plan, const Assignment& y,
                      std::vector<NodeId>* free_out) {
  if (y.size() != plan.members.size())
    throw ArgumentError("conditioning assigns " + std::to_string(y.size()) + " of " +
                        std::to_string(plan.members.size()) + " cutset units");
  Assignment base(net.size(), 0);
  std::vector<std::uint8_t> fixed(net.size(), 0);
  for (std::size_t k = 0; k < y.size(); ++k) {
    base.at(plan.members[k]) = y[k];
    fixed[plan.members[k]] = 1;
  }
  if (free_out)
    for (NodeId i = 0; i < net.size(); ++i)
      if (!fixed[i]) free_out->push_back(i);
  return base;
}

}  // namespace detail

// max G over every completion of Y = y, by enumeration of the free units.
inline OptimumReport conditioned_optimum(const Network& net, const CutsetPlan& plan, const Assignment& y) {
  std::vector<NodeId> free;
  Assignment base = detail::pin(net, plan, y, &free);
  if (free.size() > kBruteForceLimit)
    throw SizeError("conditioned scan limited to " + std::to_string(kBruteForceLimit) + " free units");
  return detail::best_of_scan(net, std::move(base), free);
}

struct ConditionedSolution {
  Weight gmax;
  Assignment witness;
};

// Same maximum by dynamic programming over the forest left after fixing Y = y. A fixed
// unit c contributes w_ic * y_c to each free neighbor's bias, which is the difference of
// the pair it would publish as a cutset unit (G^0 = y_c theta_c, G^{i1} = y_c(theta_c + w_ic)).
// Ties resolve to X = 1.
inline ConditionedSolution conditioned_tree_optimum(const Network& net, const CutsetPlan& plan, const Assignment& y) {
  if (!plan.acyclic_after_removal) throw PreconditionError("cutset plan does not cut every cycle");
  Assignment x = detail::pin(net, plan, y, nullptr);
  const std::size_t n = net.size();
  std::vector<std::uint8_t> fixed(n, 0);
  for (NodeId c : plan.members) fixed[c] = 1;

  Weight constant;
  std::vector<Weight> bias(net.biases());
  for (NodeId c : plan.members)
    if (x[c]) constant += net.bias(c);
  for (const auto& e : net.edges()) {
    if (fixed[e.a] && fixed[e.b]) {
      if (x[e.a] && x[e.b]) constant += e.weight;
    } else if (fixed[e.a]) {
      if (x[e.a]) bias[e.b] += e.weight;
    } else if (fixed[e.b]) {
      if (x[e.b]) bias[e.a] += e.weight;
    }
  }

  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeId> parent(n, n);
  std::vector<Weight> link(n), sum0(n), sum1(n), g0(n), g1(n);
  Weight total = constant;
  for (NodeId root = 0; root < n; ++root) {
    if (fixed[root] || seen[root]) continue;
    std::vector<NodeId> order{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      NodeId i = order[head];
      for (const auto& nb : net.neighbors(i)) {
        if (fixed[nb.node] || seen[nb.node]) continue;
        seen[nb.node] = 1;
        parent[nb.node] = i;
        link[nb.node] = nb.weight;
        order.push_back(nb.node);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId i = *it;
      g0[i] = max(sum0[i], sum1[i] + bias[i]);
      g1[i] = max(sum0[i], sum1[i] + link[i] + bias[i]);
      if (parent[i] != n) {
        sum0[parent[i]] += g0[i];
        sum1[parent[i]] += g1[i];
      }
    }
    total += g0[root];
    for (NodeId i : order) {
      Weight with = sum1[i] + bias[i];
      if (parent[i] != n && x[parent[i]]) with += link[i];
      x[i] = with >= sum0[i];
    }
  }
  return {total, std::move(x)};
}

struct Conditioning {
  Assignment y;  // aligned with plan.members
  Weight gmax;
  Assignment witness;
};

// Gmax(X | Y = y) for every y in lexicographic order.
inline std::vector<Conditioning> cutset_conditionings(const Network& net, const CutsetPlan& plan) {
  if (!plan.acyclic_after_removal) throw PreconditionError("cutset plan does not cut every cycle");
  if (plan.members.size() > kCutsetEnumerationLimit)
    throw SizeError("cutset enumeration limited to " + std::to_string(kCutsetEnumerationLimit) + " units");
  const std::size_t k = plan.members.size();
  std::vector<Conditioning> rows;
  rows.reserve(std::size_t{1} << k);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    Assignment y(k);
    for (std::size_t b = 0; b < k; ++b) y[b] = (code >> (k - 1 - b)) & 1;
    auto sol = conditioned_tree_optimum(net, plan, y);
    rows.push_back({std::move(y), sol.gmax, std::move(sol.witness)});
  }
  return rows;
}

// Gmax(X) = max_y Gmax(X | Y = y). argmax holds one witness per maximizing conditioning.
inline OptimumReport cutset_exact_optimize(const Network& net, const CutsetPlan& plan) {
  auto rows = cutset_conditionings(net, plan);
  OptimumReport rep;
  rep.gmax = rows.front().gmax;
  for (const auto& r : rows) rep.gmax = max(rep.gmax, r.gmax);
  for (auto& r : rows)
    if (r.gmax == rep.gmax) rep.argmax.push_back(std::move(r.witness));
  std::sort(rep.argmax.begin(), rep.argmax.end());
  rep.states_scanned = rows.size();
  return rep;
}

// Repeatedly strip units of degree <= 1; from what remains take the highest-degree unit
// (lowest id on ties) into the cutset; stop once nothing remains.
inline CutsetPlan greedy_cutset(const Network& net) {
  const std::size_t n = net.size();
  std::vector<std::uint8_t> gone(n, 0);
  std::vector<std::size_t> deg(n);
  for (NodeId i = 0; i < n; ++i) deg[i] = net.degree(i);
  auto remove = [&](NodeId i) {
    gone[i] = 1;
    for (const auto& nb : net.neighbors(i))
      if (!gone[nb.node]) --deg[nb.node];
  };
  std::vector<NodeId> members;
  for (;;) {
    for (bool stripped = true; stripped;) {
      stripped = false;
      for (NodeId i = 0; i < n; ++i)
        if (!gone[i] && deg[i] <= 1) {
          remove(i);
          stripped = true;
        }
    }
    std::optional<NodeId> pick;
    for (NodeId i = 0; i < n; ++i)
      if (!gone[i] && (!pick || deg[i] > deg[*pick])) pick = i;
    if (!pick) break;
    members.push_back(*pick);
    remove(*pick);
  }
  return make_cutset_plan(net, std::move(members));
}

}  // namespace symnet

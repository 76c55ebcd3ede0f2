#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/network.hpp"
#include "symnet/random.hpp"

namespace symnet {

using ActivationSet = std::vector<NodeId>;  // sorted, nonempty

struct ActivationEvent {
  std::size_t step;
  ActivationSet nodes;
};

enum class SchedulerKind { central_rr, central_random, synchronous_all, fair_exclusion, scripted };

struct SchedulerSpec {
  SchedulerKind kind = SchedulerKind::central_rr;
  // central_rr: optional cyclic order (a permutation of all units; empty means 0..n-1).
  // scripted: the replayed sequence of singletons.
  std::vector<NodeId> sequence;
  std::uint64_t seed = 1;
};

inline std::string to_string(const SchedulerSpec& s) {
  auto ids = [&] {
    std::string out;
    for (std::size_t k = 0; k < s.sequence.size(); ++k)
      out += (k ? "," : "") + std::to_string(s.sequence[k] + 1);
    return out;
  };
  switch (s.kind) {
    case SchedulerKind::central_rr: return s.sequence.empty() ? "central-rr" : "central-rr:" + ids();
    case SchedulerKind::central_random: return "central-random";
    case SchedulerKind::synchronous_all: return "sync-all";
    case SchedulerKind::fair_exclusion: return "fair-excl";
    case SchedulerKind::scripted: return "scripted:" + ids();
  }
  return "?";
}

// "central-rr[:ids]" | "central-random" | "sync-all" | "fair-excl" | "scripted:<ids>", ids 1-based.
inline SchedulerSpec parse_scheduler_spec(std::string_view text, std::uint64_t seed = 1) {
  SchedulerSpec spec;
  spec.seed = seed;
  std::string_view head = text, tail;
  bool has_tail = false;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    tail = text.substr(colon + 1);
    has_tail = true;
  }
  auto parse_ids = [&] {
    std::vector<NodeId> ids;
    std::size_t pos = 0;
    while (pos <= tail.size()) {
      auto comma = tail.find(',', pos);
      if (comma == std::string_view::npos) comma = tail.size();
      std::string item(tail.substr(pos, comma - pos));
      std::size_t used = 0;
      unsigned long id = 0;
      try {
        id = std::stoul(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size() || id == 0)
        throw ConfigError("bad unit id '" + item + "' in scheduler '" + std::string(text) + "'");
      ids.push_back(id - 1);
      pos = comma + 1;
    }
    return ids;
  };
  if (head == "central-rr") {
    spec.kind = SchedulerKind::central_rr;
    if (has_tail) spec.sequence = parse_ids();
  } else if (head == "central-random" && !has_tail) {
    spec.kind = SchedulerKind::central_random;
  } else if ((head == "sync-all" || head == "synchronous-all") && !has_tail) {
    spec.kind = SchedulerKind::synchronous_all;
  } else if ((head == "fair-excl" || head == "fair-exclusion") && !has_tail) {
    spec.kind = SchedulerKind::fair_exclusion;
  } else if (head == "scripted" && has_tail) {
    spec.kind = SchedulerKind::scripted;
    spec.sequence = parse_ids();
  } else {
    throw ConfigError("unknown scheduler '" + std::string(text) + "'");
  }
  return spec;
}

// Produces the activation set for each step.
//   central-rr      singletons in a fixed cyclic order
//   central-random  singletons, a fresh random permutation of all units every n steps
//   sync-all        every unit, every step
//   fair-excl       odd steps: next round-robin singleton; even steps: random nonempty subset.
//                   Any 2n consecutive steps therefore hold every singleton.
//   scripted        replays its singleton sequence cyclically
class Scheduler {
 public:
  Scheduler(SchedulerSpec spec, std::size_t n) : spec_(std::move(spec)), n_(n), rng_(spec_.seed) {
    if (n == 0) throw ConfigError("scheduler needs at least one unit");
    for (NodeId id : spec_.sequence)
      if (id >= n) throw ConfigError("scheduler references unit " + std::to_string(id + 1) + " > " + std::to_string(n));
    if (spec_.kind == SchedulerKind::central_rr) {
      if (spec_.sequence.empty()) {
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), NodeId{0});
      } else {
        order_ = spec_.sequence;
        auto sorted = order_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
          if (sorted.size() != n || sorted[k] != k)
            throw ConfigError("central-rr order must list every unit exactly once");
      }
    } else if (spec_.kind == SchedulerKind::scripted) {
      if (spec_.sequence.empty()) throw ConfigError("scripted scheduler needs a sequence");
      order_ = spec_.sequence;
    } else if (spec_.kind == SchedulerKind::central_random) {
      order_.resize(n);
      std::iota(order_.begin(), order_.end(), NodeId{0});
    }
  }

  const SchedulerSpec& spec() const noexcept { return spec_; }
  std::size_t step() const noexcept { return step_; }

  ActivationSet next_set() {
    ActivationSet out;
    switch (spec_.kind) {
      case SchedulerKind::central_rr:
      case SchedulerKind::scripted:
        out.push_back(order_[step_ % order_.size()]);
        break;
      case SchedulerKind::central_random:
        if (step_ % n_ == 0)
          for (std::size_t k = n_; k > 1; --k) std::swap(order_[k - 1], order_[uniform_below(rng_, k)]);
        out.push_back(order_[step_ % n_]);
        break;
      case SchedulerKind::synchronous_all:
        out.resize(n_);
        std::iota(out.begin(), out.end(), NodeId{0});
        break;
      case SchedulerKind::fair_exclusion:
        if (step_ % 2 == 1) {
          out.push_back(cursor_);
          cursor_ = (cursor_ + 1) % n_;
        } else {
          while (out.empty())
            for (NodeId i = 0; i < n_; ++i)
              if (rng_() >> 63) out.push_back(i);
        }
        break;
    }
    ++step_;
    return out;
  }

  // Events in one pass: the shortest span in which every unit is guaranteed a turn.
  std::size_t pass_length() const noexcept {
    switch (spec_.kind) {
      case SchedulerKind::central_rr:
      case SchedulerKind::central_random: return n_;
      case SchedulerKind::synchronous_all: return 1;
      case SchedulerKind::fair_exclusion: return 2 * n_;
      case SchedulerKind::scripted: return order_.size();
    }
    return n_;
  }

  // Window over which fairness (and so stability) is judged.
  std::size_t fairness_window() const noexcept {
    return spec_.kind == SchedulerKind::central_random ? 2 * n_ : pass_length();
  }

 private:
  SchedulerSpec spec_;
  std::size_t n_;
  Rng rng_;
  std::vector<NodeId> order_;
  std::size_t step_ = 0;
  NodeId cursor_ = 0;
};

namespace detail {

// True iff no `window` consecutive positions in [0, length) avoid every hit.
inline bool hits_every_window(const std::vector<std::size_t>& hits, std::size_t length, std::size_t window) {
  if (window == 0) return true;
  if (length < window) window = length;
  std::size_t prev_end = 0;  // first position not yet covered
  for (std::size_t h : hits) {
    if (h - prev_end >= window) return false;
    prev_end = h + 1;
  }
  return length - prev_end < window;
}

}  // namespace detail

// Every unit is activated in every span of `window` consecutive events.
// A trace shorter than the window must activate every unit at least once.
inline bool check_fairness(const std::vector<ActivationEvent>& trace, std::size_t n, std::size_t window) {
  if (trace.empty()) throw ArgumentError("empty trace");
  std::vector<std::vector<std::size_t>> hits(n);
  for (std::size_t t = 0; t < trace.size(); ++t)
    for (NodeId i : trace[t].nodes)
      if (i < n) hits[i].push_back(t);
  for (const auto& h : hits)
    if (!detail::hits_every_window(h, trace.size(), window)) return false;
  return true;
}

// For every edge {i, j}, both "i without j" and "j without i" occur in every window.
inline bool check_fair_exclusion(const std::vector<ActivationEvent>& trace, const Network& net,
                                 std::size_t window) {
  if (trace.empty()) throw ArgumentError("empty trace");
  std::vector<std::uint8_t> active(net.size(), 0);
  std::vector<std::vector<std::size_t>> only_a(net.edges().size()), only_b(net.edges().size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    for (NodeId i : trace[t].nodes) active.at(i) = 1;
    for (std::size_t e = 0; e < net.edges().size(); ++e) {
      const auto& edge = net.edges()[e];
      if (active[edge.a] && !active[edge.b]) only_a[e].push_back(t);
      if (active[edge.b] && !active[edge.a]) only_b[e].push_back(t);
    }
    for (NodeId i : trace[t].nodes) active[i] = 0;
  }
  for (std::size_t e = 0; e < net.edges().size(); ++e)
    if (!detail::hits_every_window(only_a[e], trace.size(), window) ||
        !detail::hits_every_window(only_b[e], trace.size(), window))
      return false;
  return true;
}

}  // namespace symnet

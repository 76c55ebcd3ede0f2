#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "symnet/engine.hpp"
#include "symnet/fixtures.hpp"
#include "symnet/generators.hpp"
#include "symnet/legality.hpp"
#include "symnet/oracle.hpp"

namespace symnet {

struct DemoReport {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;
  std::string summary;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

inline Network random_tree(Rng& rng, std::size_t lo, std::size_t hi) {
  auto n = static_cast<std::size_t>(uniform_between(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
  return random_network({TopologyKind::tree, n, 0, -5, 5, rng()});
}

inline SimState preset_from_pointers(const Network& net, const PointerSnapshot& p) {
  SimState s = make_zero_state(net);
  for (NodeId i = 0; i < net.size(); ++i) s.regs[i].parent = p.at(i);
  return s;
}

}  // namespace detail

// Units whose final pointer state leaves them off every tree: more than one neighbor
// not pointing at them.
inline std::vector<NodeId> non_tree_nodes(const Network& net, const SimState& s) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < net.size(); ++i)
    if (!on_tree(make_view(net, s, {}, i))) out.push_back(i);
  return out;
}

struct DominancePair {
  Weight g_first;   // the rule expected to dominate
  Weight g_second;
  bool comparable = false;
};

// activate versus Hopfield from one random initial assignment, both under the same
// seeded central-random order. Comparable when both stabilize and agree on every unit
// that activate left off the trees.
inline DominancePair dominance_experiment(const Network& net, std::uint64_t seed) {
  RunConfig cfg;
  cfg.scheduler = {SchedulerKind::central_random, {}, seed};
  cfg.init = InitMode::random;
  cfg.seed = seed;
  cfg.rule = {RuleKind::activate};
  auto a1 = run(net, cfg);
  cfg.rule = {RuleKind::hopfield};
  auto a2 = run(net, cfg);
  DominancePair out{a1.result.goodness, a2.result.goodness, a1.result.stable && a2.result.stable};
  for (NodeId i : non_tree_nodes(net, a1.final_state))
    if (a1.result.assignment[i] != a2.result.assignment[i]) out.comparable = false;
  return out;
}

// activate-with-cutset (members as cutset) versus activate. Comparable when both
// stabilize with equal values on the cutset.
inline DominancePair cutset_dominance_experiment(const Network& net, const std::vector<NodeId>& members,
                                                 std::uint64_t seed) {
  RunConfig cfg;
  cfg.scheduler = {SchedulerKind::central_random, {}, seed};
  cfg.init = InitMode::random;
  cfg.seed = seed;
  cfg.rule = {RuleKind::activate_with_cutset};
  cfg.cutset = members;
  auto a1 = run(net, cfg);
  cfg.rule = {RuleKind::activate};
  auto a2 = run(net, cfg);
  DominancePair out{a1.result.goodness, a2.result.goodness, a1.result.stable && a2.result.stable};
  for (NodeId c : members)
    if (a1.result.assignment[c] != a2.result.assignment[c]) out.comparable = false;
  return out;
}

// Tracks legality along a run: legal units must stay legal, and the illegal count
// sampled every `window` events must strictly drop until it reaches zero.
class LegalityAudit {
 public:
  LegalityAudit(const Network& net, const SimState& initial, std::size_t window)
      : net_(net), window_(window), last_(classify_legality(net, pointers_of(initial))) {
    boundary_ = count(last_);
  }

  void operator()(const EventInfo&, const SimState& s) {
    auto now = classify_legality(net_, pointers_of(s));
    for (NodeId i = 0; i < now.size(); ++i)
      if (last_[i] == Legality::legal && now[i] != Legality::legal) monotone_ = false;
    last_ = std::move(now);
    if (++events_ % window_ == 0) {
      std::size_t c = count(last_);
      if (boundary_ > 0 && c >= boundary_) decreasing_ = false;
      boundary_ = c;
    }
  }

  bool monotone() const noexcept { return monotone_; }
  bool window_decreasing() const noexcept { return decreasing_; }
  std::size_t final_illegal() const { return count(last_); }

 private:
  static std::size_t count(const std::vector<Legality>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Legality l) { return l != Legality::legal; }));
  }

  const Network& net_;
  std::size_t window_;
  std::vector<Legality> last_;
  std::size_t boundary_ = 0;
  std::size_t events_ = 0;
  bool monotone_ = true;
  bool decreasing_ = true;
};

// activate on random trees from zero registers under central-rr and fair-excl: goodness
// must equal the exhaustive maximum within 3n passes, with legality audited throughout.
inline DemoReport demo_tree_equivalence(std::size_t trials, std::uint64_t seed, std::size_t max_n = 16) {
  DemoReport rep{"trees", true, {}, {}};
  std::size_t ok = 0, legality_ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(detail::mix_seed(seed, t));
    Network net = detail::random_tree(rng, 2, max_n);
    const Weight gmax = brute_force_optima(net).gmax;
    bool trial_ok = true, trial_legal = true;
    std::ostringstream line;
    line << "trial " << t << " n=" << net.size() << " gmax=" << gmax;
    for (auto kind : {SchedulerKind::central_rr, SchedulerKind::fair_exclusion}) {
      RunConfig cfg;
      cfg.rule = {RuleKind::activate};
      cfg.scheduler = {kind, {}, rng()};
      Scheduler probe(cfg.scheduler, net.size());
      LegalityAudit audit(net, make_zero_state(net), probe.pass_length());
      auto out = run(net, cfg, std::ref(audit));
      bool good = out.result.stable && out.result.goodness == gmax && out.result.passes_used <= 3 * net.size();
      bool legal = audit.monotone() && audit.final_illegal() == 0 &&
                   (kind != SchedulerKind::fair_exclusion || audit.window_decreasing());
      trial_ok = trial_ok && good;
      trial_legal = trial_legal && legal;
      line << ' ' << to_string(cfg.scheduler) << ":g=" << out.result.goodness << ",passes=" << out.result.passes_used
           << ",legality=" << (legal ? "ok" : "bad");
    }
    ok += trial_ok;
    legality_ok += trial_legal;
    line << (trial_ok && trial_legal ? " ok" : " MISMATCH");
    rep.lines.push_back(line.str());
  }
  rep.pass = ok == trials && legality_ok == trials;
  rep.summary = detail::cat(ok, "/", trials, " tree runs reach the oracle optimum within 3n passes; ", legality_ok, "/",
                            trials, " with monotone legality");
  return rep;
}

// Registers scrambled by perturb, no initialization, fair-excl scheduler.
inline DemoReport demo_selfstab(std::size_t trials, std::uint64_t seed, std::size_t max_n = 12) {
  DemoReport rep{"selfstab", true, {}, {}};
  std::size_t ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(detail::mix_seed(seed, t));
    Network net = detail::random_tree(rng, 2, max_n);
    const Weight gmax = brute_force_optima(net).gmax;
    RunConfig cfg;
    cfg.rule = {RuleKind::activate};
    cfg.scheduler = {SchedulerKind::fair_exclusion, {}, rng()};
    cfg.init = InitMode::preset;
    cfg.preset = perturb(net, make_zero_state(net), rng());
    auto out = run(net, cfg);
    bool good = out.result.stable && out.result.goodness == gmax;
    ok += good;
    rep.lines.push_back(detail::cat("trial ", t, " n=", net.size(), " gmax=", gmax, " g=", out.result.goodness,
                                    " passes=", out.result.passes_used, good ? " ok" : " MISMATCH"));
  }
  rep.pass = ok == trials;
  rep.summary = detail::cat(ok, "/", trials, " perturbed tree runs reach oracle optimum");
  return rep;
}

// Mirror-symmetric chains under the synchronous scheduler never split the middle pair,
// while every optimum needs it split.
inline DemoReport demo_thm41(std::size_t steps = 10000) {
  DemoReport rep{"thm41", true, {}, {}};
  for (std::size_t i : {3, 4, 5}) {
    Network net = fixtures::chain2i(i);
    auto opt = brute_force_optima(net);
    bool optima_split = std::all_of(opt.argmax.begin(), opt.argmax.end(),
                                    [&](const Assignment& a) { return a[i - 1] != a[i]; });
    bool locked = true, reached = false;
    RunConfig cfg;
    cfg.rule = {RuleKind::activate};
    cfg.scheduler = {SchedulerKind::synchronous_all, {}, 1};
    cfg.max_passes = steps;
    cfg.stop_when_stable = false;
    auto out = run(net, cfg, [&](const EventInfo&, const SimState& s) {
      if (s.regs[i - 1].x != s.regs[i].x) locked = false;
      if (goodness(net, assignment_of(s)) == opt.gmax) reached = true;
    });
    bool ok = optima_split && locked && !reached && out.result.events == steps;
    rep.pass = rep.pass && ok;
    rep.lines.push_back(detail::cat("chain2i:", i, " n=", net.size(), " gmax=", opt.gmax, " optima=", opt.argmax.size(),
                                    " optima_split=", optima_split, " locked=", locked, " optimum_visited=", reached,
                                    ok ? " ok" : " MISMATCH"));
  }
  rep.summary = detail::cat("X_i == X_i+1 across ", steps, " synchronous steps on chain2i:3..5; no optimum visited");
  return rep;
}

// The scripted order 1,4,2,5,3,6 on the six-ring keeps each opposite pair in step.
inline DemoReport demo_thm42(std::size_t events = 10000) {
  DemoReport rep{"thm42", true, {}, {}};
  Network net = fixtures::ring6();
  auto opt = brute_force_optima(net);
  bool locked = true, visited = false;
  std::size_t count = 0;
  RunConfig cfg;
  cfg.rule = {RuleKind::activate};
  cfg.scheduler = {SchedulerKind::scripted, {0, 3, 1, 4, 2, 5}, 1};
  cfg.max_passes = (events + 5) / 6;
  cfg.stop_when_stable = false;
  run(net, cfg, [&](const EventInfo&, const SimState& s) {
    if (++count > events) return;
    auto a = assignment_of(s);
    if (count % 2 == 0)
      for (NodeId k = 0; k < 3; ++k)
        if (a[k] != a[k + 3]) locked = false;
    if (std::binary_search(opt.argmax.begin(), opt.argmax.end(), a)) visited = true;
  });
  rep.pass = locked && !visited && count >= events;
  rep.lines.push_back(detail::cat("ring6 gmax=", opt.gmax, " optima=", opt.argmax.size(), " pairs_locked=", locked,
                                  " optimum_visited=", visited));
  rep.summary = detail::cat("pairs (1,4),(2,5),(3,6) equal across ", events, " scripted steps; optima never visited");
  return rep;
}

// A clockwise pointer ring is a fixed point of the uniform directing rule.
inline DemoReport demo_fig9(std::size_t passes = 1000, std::size_t n = 6) {
  DemoReport rep{"fig9", true, {}, {}};
  auto preset = fixtures::illegal_ring(n);
  RunConfig cfg;
  cfg.rule = {RuleKind::activate};
  cfg.scheduler = {SchedulerKind::central_rr, {}, 1};
  cfg.init = InitMode::preset;
  cfg.preset = detail::preset_from_pointers(preset.net, preset.pointers);
  cfg.max_passes = passes;
  cfg.stop_when_stable = false;
  bool frozen = true;
  std::size_t events = 0;
  auto out = run(preset.net, cfg, [&](const EventInfo&, const SimState& s) {
    ++events;
    if (pointers_of(s) != preset.pointers) frozen = false;
  });
  std::size_t illegal = illegal_count(preset.net, out.final_state);
  rep.pass = frozen && illegal == n && events == passes * n;
  rep.lines.push_back(detail::cat("illegal_ring:", n, " events=", events, " pointers_frozen=", frozen,
                                  " illegal=", illegal));
  rep.summary = detail::cat("clockwise pointer ring unchanged for ", passes, " passes; ", illegal, "/", n, " units illegal");
  return rep;
}

// Paired runs on random sparse networks: activate against Hopfield, and the cutset rule
// (greedy cutset) against activate.
inline DemoReport demo_dominance(std::size_t trials, std::uint64_t seed, std::size_t max_n = 14) {
  DemoReport rep{"dominance", true, {}, {}};
  std::size_t cmp1 = 0, bad1 = 0, cmp2 = 0, bad2 = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(detail::mix_seed(seed, t));
    auto n = static_cast<std::size_t>(uniform_between(rng, 4, static_cast<std::int64_t>(max_n)));
    auto m = static_cast<std::size_t>(uniform_between(rng, 1, 3));
    Network net = random_network({TopologyKind::sparse, n, m, -5, 5, rng()});
    auto plan = greedy_cutset(net);
    auto run_seed = rng();
    auto d1 = dominance_experiment(net, run_seed);
    auto d2 = cutset_dominance_experiment(net, plan.members, run_seed);
    bool v1 = d1.comparable && d1.g_first < d1.g_second;
    bool v2 = d2.comparable && d2.g_first < d2.g_second;
    cmp1 += d1.comparable;
    cmp2 += d2.comparable;
    bad1 += v1;
    bad2 += v2;
    rep.lines.push_back(detail::cat("trial ", t, " n=", n, " m=", m, " cutset=", plan.members.size(),
                                    " activate=", d1.g_first, " hopfield=", d1.g_second, " comparable=", d1.comparable,
                                    " cutset_rule=", d2.g_first, " activate=", d2.g_second,
                                    " comparable=", d2.comparable, v1 || v2 ? " VIOLATION" : " ok"));
  }
  rep.pass = bad1 == 0 && bad2 == 0;
  rep.summary = detail::cat("activate >= hopfield in ", cmp1 - bad1, "/", cmp1, " comparable pairs; cutset >= activate in ",
                            cmp2 - bad2, "/", cmp2, " comparable pairs");
  return rep;
}

struct ScalingPoint {
  std::size_t length;
  double mean_events;
  double ratio;  // to the previous length, 0 for the first
};

inline std::vector<ScalingPoint> chain_scaling(const std::vector<std::size_t>& lengths, std::size_t seeds,
                                               std::uint64_t seed) {
  std::vector<ScalingPoint> out;
  for (std::size_t len : lengths) {
    double total = 0;
    for (std::size_t s = 0; s < seeds; ++s) {
      Network net = random_network({TopologyKind::chain, len, 0, -5, 5, detail::mix_seed(seed + len, s)});
      RunConfig cfg;
      cfg.rule = {RuleKind::activate};
      cfg.scheduler = {SchedulerKind::central_rr, {}, 1};
      cfg.max_passes = 4 * len;
      auto r = run(net, cfg).result;
      if (!r.stable) throw PreconditionError("chain run did not stabilize");
      total += static_cast<double>(r.events_to_stability);
    }
    double mean = total / static_cast<double>(seeds);
    out.push_back({len, mean, out.empty() ? 0.0 : mean / out.back().mean_events});
  }
  return out;
}

// Each doubling of chain length must multiply mean events to stability by 2.0 +- 25%.
inline DemoReport demo_linear(std::size_t seeds, std::uint64_t seed) {
  DemoReport rep{"linear", true, {}, {}};
  auto pts = chain_scaling({100, 200, 400, 800, 1600, 3200}, seeds, seed);
  for (const auto& p : pts) {
    bool ok = p.ratio == 0.0 || (p.ratio >= 1.5 && p.ratio <= 2.5);
    rep.pass = rep.pass && ok;
    rep.lines.push_back(detail::cat("length=", p.length, " mean_events=", p.mean_events, " ratio=", p.ratio,
                                    ok ? " ok" : " OUT_OF_BAND"));
  }
  rep.summary = detail::cat("events-to-stability vs chain length fits linear growth (", seeds, " seeds per length)");
  return rep;
}

}  // namespace symnet

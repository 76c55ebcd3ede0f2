// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symnet/symnet.hpp"

using namespace symnet;
using namespace symnet::literals;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 = none
  std::function<Verdict()> check;
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Verdict fig1_regression() {
  auto net = fixtures::fig1();
  RunConfig cfg;
  cfg.rule = {RuleKind::activate};
  auto plain = run(net, cfg);
  bool ok = plain.result.stable && to_bitstring(plain.result.assignment) == "10001" && plain.result.goodness == 3_w &&
            plain.result.passes_used <= 15;
  // the hand computation roots the tree at unit 4, which the order 4,5,1,2,3 produces
  cfg.scheduler = parse_scheduler_spec("central-rr:4,5,1,2,3");
  auto rooted = run(net, cfg);
  const auto& r = rooted.final_state.regs;
  bool regs = r[0].g0 == 2_w && r[0].g1 == 1_w && r[1].g0 == 0_w && r[1].g1 == 2_w && r[2].g0 == 2_w &&
              r[2].g1 == 2_w && r[4].g0 == 1_w && r[4].g1 == 0_w && !r[3].x && r[4].x && !r[2].x &&
              rooted.result.stable && to_bitstring(rooted.result.assignment) == "10001" &&
              rooted.result.passes_used <= 15;
  return {ok && regs, cat(format_result(plain.result), "; rooted at 4: ", format_result(rooted.result),
                          " registers ", regs ? "match" : "DIFFER")};
}

struct TreeTally {
  std::size_t trials = 0, optimal = 0, legality_ok = 0;
};

const TreeTally& tree_runs() {
  static TreeTally tally = [] {
    TreeTally t;
    for (std::size_t k = 0; k < 200; ++k) {
      Rng rng(kSeed + k);
      auto n = static_cast<std::size_t>(uniform_between(rng, 2, 16));
      auto net = random_network({TopologyKind::tree, n, 0, -5, 5, rng()});
      auto gmax = brute_force_optima(net).gmax;
      bool opt = true, legal = true;
      for (auto kind : {SchedulerKind::central_rr, SchedulerKind::fair_exclusion}) {
        RunConfig cfg;
        cfg.rule = {RuleKind::activate};
        cfg.scheduler = {kind, {}, rng()};
        LegalityAudit audit(net, make_zero_state(net), Scheduler(cfg.scheduler, n).pass_length());
        auto out = run(net, cfg, std::ref(audit));
        opt = opt && out.result.stable && out.result.goodness == gmax && out.result.passes_used <= 3 * n;
        legal = legal && audit.monotone() && audit.final_illegal() == 0 &&
                (kind != SchedulerKind::fair_exclusion || audit.window_decreasing());
      }
      ++t.trials;
      t.optimal += opt;
      t.legality_ok += legal;
    }
    return t;
  }();
  return tally;
}

Verdict tree_equivalence() {
  const auto& t = tree_runs();
  return {t.optimal == t.trials, cat(t.optimal, "/", t.trials, " random trees optimal under central-rr and fair-excl within 3n passes")};
}

Verdict from_demo(const DemoReport& r) { return {r.pass, r.summary}; }

Verdict example51_trajectory() {
  auto net = fixtures::example51();
  auto opt = brute_force_optima(net);
  RunConfig cfg;
  cfg.rule = {RuleKind::activate_with_cutset};
  cfg.cutset = std::vector<NodeId>{0};
  // starts from all zeros (energy 0); then must pass through these states in order
  const std::vector<std::pair<Weight, std::string>> want{{-199.8_w, "01100"}, {-249.7_w, "11100"}};
  std::size_t stage = 0;
  Weight last = 0_w;
  std::string levels = "0";
  cfg.scheduler = parse_scheduler_spec("central-rr:5,4,3,2,1");
  auto out = run(net, cfg, [&](const EventInfo&, const SimState& s) {
    auto a = assignment_of(s);
    Weight e = energy(net, a);
    if (e != last) levels += cat(" ", e);
    last = e;
    if (stage < want.size() && e == want[stage].first && to_bitstring(a) == want[stage].second) ++stage;
  });
  cfg.scheduler = parse_scheduler_spec("central-rr");
  auto ascending = run(net, cfg);
  bool ok = stage == want.size() && out.result.stable && to_bitstring(out.result.assignment) == "11111" &&
            energy(net, out.result.assignment) == -250.7_w && opt.argmax.size() == 1 &&
            opt.argmax[0] == out.result.assignment && ascending.result.assignment == out.result.assignment;
  return {ok, cat("order 5,4,3,2,1 energy levels ", levels, "; final ", to_bitstring(out.result.assignment),
                  " (ascending order also ends at ", to_bitstring(ascending.result.assignment), "), oracle argmax ",
                  to_bitstring(opt.argmax.at(0)))};
}

struct PairTally {
  std::size_t comparable = 0, violations = 0, strict = 0;
};

Verdict dominance(bool cutset) {
  PairTally t;
  for (std::size_t k = 0; k < 100; ++k) {
    Rng rng(kSeed * 3 + k);
    auto n = static_cast<std::size_t>(uniform_between(rng, 4, 14));
    auto m = static_cast<std::size_t>(uniform_between(rng, 1, 3));
    auto net = random_network({TopologyKind::sparse, n, m, -5, 5, rng()});
    auto seed = rng();
    auto d = cutset ? cutset_dominance_experiment(net, greedy_cutset(net).members, seed)
                    : dominance_experiment(net, seed);
    if (!d.comparable) continue;
    ++t.comparable;
    t.violations += d.g_first < d.g_second;
    t.strict += d.g_first > d.g_second;
  }
  return {t.violations == 0 && t.comparable > 0,
          cat(t.comparable, " comparable pairs, ", t.violations, " violations, ", t.strict, " strict gains")};
}

Verdict cutset_equivalence() {
  std::size_t nets = 0, equal = 0, regenerated = 0;
  for (std::uint64_t k = 0; nets < 100; ++k) {
    Rng rng(kSeed * 5 + k);
    auto n = static_cast<std::size_t>(uniform_between(rng, 4, 16));
    auto m = static_cast<std::size_t>(uniform_between(rng, 0, 4));
    auto net = random_network({TopologyKind::sparse, n, m, -5, 5, rng()});
    auto plan = greedy_cutset(net);
    if (plan.members.size() > 4) {
      ++regenerated;
      continue;
    }
    ++nets;
    equal += cutset_exact_optimize(net, plan).gmax == brute_force_optima(net).gmax;
  }
  return {equal == nets, cat(equal, "/", nets, " nets agree with the exhaustive scan (", regenerated, " redrawn)")};
}

Verdict legality_invariants() {
  const auto& t = tree_runs();
  return {t.legality_ok == t.trials,
          cat(t.legality_ok, "/", t.trials, " tree traces monotone, reach zero illegal, fair-excl windows strictly decrease")};
}

Verdict boltzmann_sanity() {
  double worst = 0;
  std::string detail;
  for (int h = -2; h <= 2; ++h) {
    Rng rng(kSeed + 13 + static_cast<std::uint64_t>(h + 2));
    LocalView v{0, Weight::from_int(h), false, false, {}, {}};
    int ones = 0;
    for (int k = 0; k < 100000; ++k) ones += boltzmann_step(v, 1_w, rng);
    double want = 1.0 / (1.0 + std::exp(-static_cast<double>(h)));
    double err = std::abs(ones / 100000.0 - want);
    worst = std::max(worst, err);
    detail += cat(h == -2 ? "" : " ", "h=", h, ":", ones / 100000.0);
  }
  return {worst <= 0.01, cat(detail, " max error ", worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fig1-regression", 1.0, fig1_regression},
      {2, "tree-oracle-equivalence", 30.0, tree_equivalence},
      {3, "self-stabilization", 30.0, [] { return from_demo(demo_selfstab(100, kSeed)); }},
      {4, "synchronous-symmetry-chains", 0, [] { return from_demo(demo_thm41(10000)); }},
      {5, "central-symmetry-ring", 0, [] { return from_demo(demo_thm42(10000)); }},
      {6, "illegal-ring-fixed-point", 0, [] { return from_demo(demo_fig9(1000)); }},
      {7, "example51-trajectory", 0, example51_trajectory},
      {8, "activate-dominates-hopfield", 0, [] { return dominance(false); }},
      {9, "cutset-dominates-activate", 0, [] { return dominance(true); }},
      {10, "cutset-enumeration-equivalence", 0, cutset_equivalence},
      {11, "legality-invariants", 0, legality_invariants},
      {12, "linear-scaling", 60.0, [] { return from_demo(demo_linear(100, kSeed)); }},
      {13, "boltzmann-sigmoid", 0, boltzmann_sanity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v{false, {}};
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, cat("exception: ", e.what())};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      v.pass = false;
      v.detail += cat(" (over the ", c.time_limit, " s limit)");
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << ": " << v.detail << " [" << secs
              << " s]\n";
  }
  std::cout << (failures == 0 ? "ALL PASS" : cat(failures, " FAILED")) << '\n';
  return failures == 0 ? 0 : 1;
}

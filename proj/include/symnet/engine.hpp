#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/legality.hpp"
#include "symnet/network.hpp"
#include "symnet/random.hpp"
#include "symnet/scheduler.hpp"
#include "symnet/unit_rules.hpp"

namespace symnet {

struct SimState {
  std::vector<ActivationRegister> regs;
  std::size_t step = 0;
  friend bool operator==(const SimState&, const SimState&) = default;
};

inline Assignment assignment_of(const SimState& s) {
  Assignment a(s.regs.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = s.regs[i].x;
  return a;
}

inline PointerSnapshot pointers_of(const SimState& s) {
  PointerSnapshot p(s.regs.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = s.regs[i].parent;
  return p;
}

inline std::size_t illegal_count(const Network& net, const SimState& s) {
  return illegal_count(net, pointers_of(s));
}

inline std::vector<std::uint8_t> cutset_mask(const Network& net, const std::vector<NodeId>& members) {
  std::vector<std::uint8_t> mask(net.size(), 0);
  for (NodeId c : members) mask.at(c) = 1;
  return mask;
}

// All registers cleared: X = 0, G = 0, every P_i^j = 0.
inline SimState make_zero_state(const Network& net, const std::vector<std::uint8_t>& mask = {}) {
  SimState s;
  s.regs.resize(net.size());
  for (NodeId i = 0; i < net.size(); ++i) {
    s.regs[i].parent.assign(net.degree(i), 0);
    if (!mask.empty() && mask[i]) s.regs[i].cutset_g1.emplace(net.degree(i));
  }
  return s;
}

// Every register field replaced by an independent random value. G values are drawn
// from [-bound, bound]; the default bound is sum|w| + sum|theta|.
inline SimState perturb(const Network& net, const SimState& state, std::uint64_t seed,
                        std::optional<Weight> bound = std::nullopt) {
  if (!bound) {
    Weight b;
    for (const auto& e : net.edges()) b += e.weight.abs();
    for (auto t : net.biases()) b += t.abs();
    bound = b;
  }
  Rng rng(seed);
  auto g = [&] { return Weight::from_micros(uniform_between(rng, -bound->micros(), bound->micros())); };
  SimState out = state;
  for (auto& r : out.regs) {
    r.x = rng() >> 63;
    r.g0 = g();
    r.g1 = g();
    for (auto& bit : r.parent) bit = rng() >> 63;
    if (r.cutset_g1)
      for (auto& v : *r.cutset_g1) v = g();
  }
  return out;
}

inline LocalView make_view(const Network& net, const SimState& s, const std::vector<std::uint8_t>& mask, NodeId i) {
  const auto& own = s.regs[i];
  auto is_cut = [&](NodeId j) { return !mask.empty() && mask[j]; };
  LocalView v{i, net.bias(i), is_cut(i), own.x, own.parent, {}};
  auto nbs = net.neighbors(i);
  v.neighbors.reserve(nbs.size());
  for (const auto& nb : nbs) {
    const auto& r = s.regs[nb.node];
    bool cut = is_cut(nb.node);
    Weight g1 = cut && r.cutset_g1 ? (*r.cutset_g1)[nb.back] : r.g1;
    v.neighbors.push_back({nb.node, nb.weight, r.x, r.g0, g1, r.parent[nb.back] != 0, cut});
  }
  return v;
}

enum class RuleKind { hopfield, boltzmann, activate, activate_with_cutset };

struct Rule {
  RuleKind kind = RuleKind::activate;
  Weight temperature = Weight::from_int(1);  // boltzmann only
};

inline std::string to_string(const Rule& r) {
  switch (r.kind) {
    case RuleKind::hopfield: return "hopfield";
    case RuleKind::boltzmann: return "boltzmann:" + r.temperature.to_string();
    case RuleKind::activate: return "activate";
    case RuleKind::activate_with_cutset: return "activate-with-cutset";
  }
  return "?";
}

// "hopfield" | "boltzmann[:T]" | "activate" | "activate-with-cutset"
inline Rule parse_rule(std::string_view text) {
  if (text == "hopfield") return {RuleKind::hopfield};
  if (text == "activate") return {RuleKind::activate};
  if (text == "activate-with-cutset") return {RuleKind::activate_with_cutset};
  if (text == "boltzmann") return {RuleKind::boltzmann};
  if (text.substr(0, 10) == "boltzmann:") {
    Rule r{RuleKind::boltzmann};
    try {
      r.temperature = Weight::parse(text.substr(10));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bad temperature: ") + e.what());
    }
    if (r.temperature <= Weight{}) throw ConfigError("temperature must be positive");
    return r;
  }
  throw ConfigError("unknown rule '" + std::string(text) + "'");
}

// Next register of unit i: tree directing, then goodness, then activation, as one atomic
// step over the given (pre-event) snapshot.
inline ActivationRegister step_unit(const Network& net, const SimState& s, const Rule& rule,
                                    const std::vector<std::uint8_t>& mask, NodeId i, Rng& rng) {
  ActivationRegister next = s.regs[i];
  LocalView v = make_view(net, s, mask, i);
  switch (rule.kind) {
    case RuleKind::hopfield:
      next.x = hopfield_step(v);
      return next;
    case RuleKind::boltzmann:
      next.x = boltzmann_step(v, rule.temperature, rng);
      return next;
    case RuleKind::activate:
    case RuleKind::activate_with_cutset:
      break;
  }
  v.pointers = tree_direct_step(v);
  next.parent = v.pointers;
  if (v.is_cutset) {
    auto cg = cutset_goodness_step(v);
    next.g0 = cg.g0;
    next.cutset_g1 = std::move(cg.toward);
  } else if (on_tree(v)) {
    auto gp = goodness_step(v);
    next.g0 = gp.g0;
    next.g1 = gp.g1;
  }
  next.x = activation_step(v);
  return next;
}

enum class Field : std::uint8_t { x, g0, g1, pointer, cutset_g1 };

struct RegisterDelta {
  NodeId node;
  Field field;
  NodeId neighbor;     // pointer / cutset_g1 only
  std::int64_t value;  // bit, or weight micros
  friend bool operator==(const RegisterDelta&, const RegisterDelta&) = default;
};

// "3:X=1", "3:G0=2", "3:P4=1" (pointer toward unit 4), "1:C4=2.9" (cutset value toward 4).
inline std::string to_string(const RegisterDelta& d) {
  std::string out = std::to_string(d.node + 1) + ":";
  auto w = [&] { return Weight::from_micros(d.value).to_string(); };
  switch (d.field) {
    case Field::x: return out + "X=" + std::to_string(d.value);
    case Field::g0: return out + "G0=" + w();
    case Field::g1: return out + "G1=" + w();
    case Field::pointer: return out + "P" + std::to_string(d.neighbor + 1) + "=" + std::to_string(d.value);
    case Field::cutset_g1: return out + "C" + std::to_string(d.neighbor + 1) + "=" + w();
  }
  return out;
}

inline void append_deltas(const Network& net, NodeId i, const ActivationRegister& before,
                          const ActivationRegister& after, std::vector<RegisterDelta>& out) {
  if (before.x != after.x) out.push_back({i, Field::x, 0, after.x});
  if (before.g0 != after.g0) out.push_back({i, Field::g0, 0, after.g0.micros()});
  if (before.g1 != after.g1) out.push_back({i, Field::g1, 0, after.g1.micros()});
  auto nbs = net.neighbors(i);
  for (std::size_t k = 0; k < nbs.size(); ++k)
    if (before.parent[k] != after.parent[k]) out.push_back({i, Field::pointer, nbs[k].node, after.parent[k]});
  if (after.cutset_g1)
    for (std::size_t k = 0; k < nbs.size(); ++k) {
      Weight old = before.cutset_g1 ? (*before.cutset_g1)[k] : Weight{};
      if (!before.cutset_g1 || old != (*after.cutset_g1)[k])
        out.push_back({i, Field::cutset_g1, nbs[k].node, (*after.cutset_g1)[k].micros()});
    }
}

inline void apply_deltas(const Network& net, SimState& s, const std::vector<RegisterDelta>& deltas) {
  for (const auto& d : deltas) {
    auto& r = s.regs.at(d.node);
    switch (d.field) {
      case Field::x: r.x = d.value != 0; break;
      case Field::g0: r.g0 = Weight::from_micros(d.value); break;
      case Field::g1: r.g1 = Weight::from_micros(d.value); break;
      case Field::pointer: r.parent[*net.neighbor_index(d.node, d.neighbor)] = d.value != 0; break;
      case Field::cutset_g1:
        if (!r.cutset_g1) r.cutset_g1.emplace(net.degree(d.node));
        (*r.cutset_g1)[*net.neighbor_index(d.node, d.neighbor)] = Weight::from_micros(d.value);
        break;
    }
  }
}

// Activates `ids` synchronously: every unit reads the pre-event snapshot, then all writes
// commit together. Returns the register changes; advances the step counter.
inline std::vector<RegisterDelta> apply_event(const Network& net, SimState& s, const ActivationSet& ids,
                                              const Rule& rule, const std::vector<std::uint8_t>& mask, Rng& rng) {
  if (ids.empty()) throw ArgumentError("activation set must be nonempty");
  std::vector<RegisterDelta> deltas;
  if (ids.size() == 1) {
    auto next = step_unit(net, s, rule, mask, ids[0], rng);
    append_deltas(net, ids[0], s.regs[ids[0]], next, deltas);
    s.regs[ids[0]] = std::move(next);
  } else {
    std::vector<ActivationRegister> next;
    next.reserve(ids.size());
    for (NodeId i : ids) next.push_back(step_unit(net, s, rule, mask, i, rng));
    for (std::size_t k = 0; k < ids.size(); ++k) {
      append_deltas(net, ids[k], s.regs[ids[k]], next[k], deltas);
      s.regs[ids[k]] = std::move(next[k]);
    }
  }
  ++s.step;
  return deltas;
}

enum class InitMode { zeros, random, preset };

struct RunConfig {
  Rule rule;
  // Required for activate-with-cutset (may be empty); ignored by the other rules.
  std::optional<std::vector<NodeId>> cutset;
  SchedulerSpec scheduler;
  InitMode init = InitMode::zeros;
  std::uint64_t seed = 1;  // random init and boltzmann draws
  std::optional<SimState> preset;
  std::size_t max_passes = 1000;
  std::optional<std::size_t> stability_window;  // default: the scheduler's fairness window
  bool stop_when_stable = true;
  bool record_trace = false;
};

struct TraceEvent {
  std::size_t step;
  std::size_t pass;
  ActivationSet nodes;
  Weight goodness;
  std::size_t illegal;
  std::vector<RegisterDelta> deltas;
};

struct Trace {
  SimState initial;
  std::vector<TraceEvent> events;

  std::vector<ActivationEvent> activations() const {
    std::vector<ActivationEvent> out;
    out.reserve(events.size());
    for (const auto& e : events) out.push_back({e.step, e.nodes});
    return out;
  }
};

struct RunResult {
  Assignment assignment;
  bool stable = false;
  std::size_t passes_used = 0;      // passes up to the last register change
  Weight goodness;
  std::size_t events = 0;           // events executed, including the quiet window
  std::size_t events_to_stability = 0;  // events up to and including the last change
};

struct RunOutcome {
  RunResult result;
  Trace trace;
  SimState final_state;
};

struct EventInfo {
  std::size_t step;
  std::size_t pass;
  const ActivationSet& nodes;
  const std::vector<RegisterDelta>& deltas;
};

using Observer = std::function<void(const EventInfo&, const SimState&)>;

inline SimState initial_state(const Network& net, const RunConfig& cfg, const std::vector<std::uint8_t>& mask) {
  SimState s = make_zero_state(net, mask);
  switch (cfg.init) {
    case InitMode::zeros:
      break;
    case InitMode::random: {
      Rng rng(cfg.seed);
      for (auto& r : s.regs) r.x = rng() >> 63;
      break;
    }
    case InitMode::preset: {
      if (!cfg.preset) throw ConfigError("init=preset needs a preset state");
      const auto& p = *cfg.preset;
      if (p.regs.size() != net.size()) throw DimensionError("preset state size mismatch");
      for (NodeId i = 0; i < net.size(); ++i) {
        if (p.regs[i].parent.size() != net.degree(i)) throw DimensionError("preset pointer row size mismatch");
        ActivationRegister r = p.regs[i];
        if (!s.regs[i].cutset_g1) r.cutset_g1.reset();
        else if (!r.cutset_g1 || r.cutset_g1->size() != net.degree(i)) r.cutset_g1 = s.regs[i].cutset_g1;
        s.regs[i] = std::move(r);
      }
      break;
    }
  }
  return s;
}

// Runs `rule` under the scheduler until no register changes across one stability window,
// or until max_passes passes have elapsed (stable = false).
inline RunOutcome run(const Network& net, const RunConfig& cfg, const Observer& observe = {}) {
  std::vector<std::uint8_t> mask;
  if (cfg.rule.kind == RuleKind::activate_with_cutset) {
    if (!cfg.cutset) throw PreconditionError("activate-with-cutset needs a cutset declaration");
    mask = cutset_mask(net, *cfg.cutset);
  }
  if (cfg.rule.kind == RuleKind::boltzmann && cfg.rule.temperature <= Weight{})
    throw ArgumentError("temperature must be positive");

  Scheduler sched(cfg.scheduler, net.size());
  const std::size_t pass_len = sched.pass_length();
  const std::size_t window = cfg.stability_window.value_or(sched.fairness_window());
  const std::size_t budget = cfg.max_passes * pass_len;

  RunOutcome out;
  SimState s = initial_state(net, cfg, mask);
  if (cfg.record_trace) out.trace.initial = s;
  Rng rule_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);

  std::size_t quiet = 0;
  std::size_t last_change = 0;  // events up to and including the latest change
  bool stable = false;
  for (std::size_t t = 0; t < budget; ++t) {
    ActivationSet ids = sched.next_set();
    const std::size_t step = s.step;
    auto deltas = apply_event(net, s, ids, cfg.rule, mask, rule_rng);
    if (deltas.empty()) {
      ++quiet;
    } else {
      quiet = 0;
      last_change = t + 1;
    }
    if (observe) observe(EventInfo{step, step / pass_len, ids, deltas}, s);
    if (cfg.record_trace)
      out.trace.events.push_back({step, step / pass_len, ids, goodness(net, assignment_of(s)),
                                  illegal_count(net, s), std::move(deltas)});
    out.result.events = t + 1;
    if (quiet >= window) {
      stable = true;
      if (cfg.stop_when_stable) break;
    } else {
      stable = false;
    }
  }
  out.result.stable = stable;
  out.result.assignment = assignment_of(s);
  out.result.goodness = goodness(net, out.result.assignment);
  out.result.events_to_stability = last_change;
  out.result.passes_used = (last_change + pass_len - 1) / pass_len;
  out.final_state = std::move(s);
  return out;
}

// step<TAB>pass<TAB>ids<TAB>goodness<TAB>illegal<TAB>changes ("-" when nothing changed)
inline void write_trace_tsv(std::ostream& os, const Trace& trace) {
  for (const auto& e : trace.events) {
    os << e.step << '\t' << e.pass << '\t';
    for (std::size_t k = 0; k < e.nodes.size(); ++k) os << (k ? "," : "") << e.nodes[k] + 1;
    os << '\t' << e.goodness << '\t' << e.illegal << '\t';
    if (e.deltas.empty()) os << '-';
    for (std::size_t k = 0; k < e.deltas.size(); ++k) os << (k ? "," : "") << to_string(e.deltas[k]);
    os << '\n';
  }
}

inline std::string format_result(const RunResult& r) {
  std::ostringstream os;
  os << "RESULT stable=" << (r.stable ? 1 : 0) << " passes=" << r.passes_used << " goodness=" << r.goodness
     << " assignment=" << to_bitstring(r.assignment);
  return os.str();
}

}  // namespace symnet

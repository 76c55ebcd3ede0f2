// symnet: run unit rules, query the exhaustive oracle, replay the demonstration experiments.
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symnet/symnet.hpp"

using namespace symnet;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

struct Source {
  std::string net_path;
  std::string fixture;

  void add_to(CLI::App& app) {
    auto* net = app.add_option("--net", net_path, "network file");
    auto* fix = app.add_option("--fixture", fixture, "built-in network: fig1, example51, ring6, chain2i:<i>, illegal_ring:<n>");
    net->excludes(fix);
  }

  Network load() const {
    if (!net_path.empty()) return load_network_file(net_path);
    if (!fixture.empty()) return fixtures::by_name(fixture);
    throw ArgumentError("one of --net or --fixture is required");
  }
};

// "A", "1,3", "A C", "greedy", "none"; letters count from A = 1.
std::optional<std::vector<NodeId>> parse_cutset(const std::string& text, const Network& net) {
  if (text == "none") return std::nullopt;
  if (text == "greedy") return greedy_cutset(net).members;
  std::vector<NodeId> ids;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    NodeId id = 0;
    if (token.size() == 1 && std::isalpha(static_cast<unsigned char>(token[0]))) {
      id = static_cast<NodeId>(std::toupper(static_cast<unsigned char>(token[0])) - 'A' + 1);
    } else {
      std::size_t used = 0;
      try {
        id = std::stoul(token, &used);
      } catch (const std::exception&) {
      }
      if (used != token.size()) id = 0;
    }
    if (id == 0 || id > net.size()) throw ArgumentError("bad cutset unit '" + token + "'");
    ids.push_back(id - 1);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else token += c;
  }
  flush();
  return ids;
}

struct RunArgs {
  Source source;
  std::string rule = "activate";
  std::string sched = "central-rr";
  std::uint64_t seed = 1;
  std::string init = "zeros";
  std::size_t max_passes = 1000;
  std::string trace_path;
  std::string format = "summary";
  std::string cutset;
};

int cmd_run(const RunArgs& args) {
  Network net = args.source.load();
  RunConfig cfg;
  cfg.rule = parse_rule(args.rule);
  cfg.scheduler = parse_scheduler_spec(args.sched, args.seed);
  cfg.seed = args.seed;
  cfg.max_passes = args.max_passes;
  cfg.record_trace = !args.trace_path.empty() || args.format == "tsv";
  cfg.cutset = args.cutset.empty() ? net.declared_cutset() : parse_cutset(args.cutset, net);
  std::vector<std::uint8_t> mask;
  if (cfg.rule.kind == RuleKind::activate_with_cutset && cfg.cutset) mask = cutset_mask(net, *cfg.cutset);

  if (args.init == "zeros") {
    cfg.init = InitMode::zeros;
  } else if (args.init == "random") {
    cfg.init = InitMode::random;
  } else if (args.init == "perturb") {
    cfg.init = InitMode::preset;
    cfg.preset = perturb(net, make_zero_state(net, mask), args.seed);
  } else if (args.init == "preset") {
    const std::string& f = args.source.fixture;
    if (f.rfind("illegal_ring", 0) != 0) throw ArgumentError("--init preset is available for illegal_ring fixtures only");
    auto preset = fixtures::illegal_ring(net.size());
    cfg.init = InitMode::preset;
    cfg.preset = make_zero_state(net, mask);
    for (NodeId i = 0; i < net.size(); ++i) cfg.preset->regs[i].parent = preset.pointers[i];
  } else {
    throw ArgumentError("unknown init mode '" + args.init + "'");
  }

  auto out = run(net, cfg);
  if (!args.trace_path.empty()) {
    std::ofstream file(args.trace_path);
    if (!file) throw Error("cannot write trace file '" + args.trace_path + "'");
    write_trace_tsv(file, out.trace);
  }
  if (args.format == "tsv") write_trace_tsv(std::cout, out.trace);
  std::cout << format_result(out.result) << '\n';
  return out.result.stable ? kOk : kInconclusive;
}

int cmd_oracle(const Source& source, const std::string& cutset) {
  Network net = source.load();
  auto rep = brute_force_optima(net);
  std::cout << "OPT goodness=" << rep.gmax << " count=" << rep.argmax.size() << '\n';
  for (const auto& a : rep.argmax) std::cout << to_bitstring(a) << '\n';
  if (cutset.empty()) return kOk;
  auto members = parse_cutset(cutset, net).value_or(std::vector<NodeId>{});
  auto plan = make_cutset_plan(net, members);
  std::cout << "CUTSET members=";
  for (std::size_t k = 0; k < plan.members.size(); ++k) std::cout << (k ? "," : "") << plan.members[k] + 1;
  std::cout << " acyclic=" << (plan.acyclic_after_removal ? 1 : 0) << '\n';
  if (!plan.acyclic_after_removal) throw PreconditionError("cutset does not cut every cycle");
  for (const auto& row : cutset_conditionings(net, plan))
    std::cout << "y=" << to_bitstring(row.y) << " gmax=" << row.gmax << " witness=" << to_bitstring(row.witness) << '\n';
  return kOk;
}

int cmd_demo(const std::string& name, std::optional<std::size_t> trials, std::uint64_t seed) {
  DemoReport rep;
  if (name == "thm41") rep = demo_thm41(trials.value_or(10000));
  else if (name == "thm42") rep = demo_thm42(trials.value_or(10000));
  else if (name == "fig9") rep = demo_fig9(trials.value_or(1000));
  else if (name == "selfstab") rep = demo_selfstab(trials.value_or(100), seed);
  else if (name == "dominance") rep = demo_dominance(trials.value_or(100), seed);
  else if (name == "linear") rep = demo_linear(trials.value_or(100), seed);
  else if (name == "trees") rep = demo_tree_equivalence(trials.value_or(200), seed);
  else throw ArgumentError("unknown demo '" + name + "' (thm41, thm42, fig9, selfstab, dominance, linear, trees)");
  for (const auto& line : rep.lines) std::cout << line << '\n';
  std::cout << (rep.pass ? "PASS: " : "FAIL: ") << rep.summary << '\n';
  return rep.pass ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric network energy minimization simulator"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "run a unit rule under a scheduler until stable");
  run_args.source.add_to(*run_cmd);
  run_cmd->add_option("--rule", run_args.rule, "hopfield | boltzmann[:T] | activate | activate-with-cutset")
      ->capture_default_str();
  run_cmd->add_option("--sched", run_args.sched,
                      "central-rr[:order] | central-random | sync-all | fair-excl | scripted:<ids>")
      ->capture_default_str();
  run_cmd->add_option("--seed", run_args.seed, "seed for random init, schedulers and boltzmann")->capture_default_str();
  run_cmd->add_option("--init", run_args.init, "zeros | random | perturb | preset")->capture_default_str();
  run_cmd->add_option("--max-passes", run_args.max_passes, "pass budget")->capture_default_str();
  run_cmd->add_option("--trace", run_args.trace_path, "write the event trace (TSV) here");
  run_cmd->add_option("--format", run_args.format, "summary | tsv")
      ->check(CLI::IsMember({"summary", "tsv"}))
      ->capture_default_str();
  run_cmd->add_option("--cutset", run_args.cutset, "unit ids or letters, 'greedy' or 'none' (default: file's cutset)");

  Source oracle_source;
  std::string oracle_cutset;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive optimum and optional cutset conditioning table");
  oracle_source.add_to(*oracle_cmd);
  oracle_cmd->add_option("--cutset", oracle_cutset, "unit ids or letters, or 'greedy'");

  std::string demo_name;
  std::optional<std::size_t> demo_trials;
  std::uint64_t demo_seed = 1;
  auto* demo_cmd = app.add_subcommand("demo", "replay a named experiment and report PASS/FAIL");
  demo_cmd->add_option("name", demo_name, "thm41 | thm42 | fig9 | selfstab | dominance | linear | trees")->required();
  demo_cmd->add_option("--trials", demo_trials, "trials, steps or seeds per length, depending on the demo");
  demo_cmd->add_option("--seed", demo_seed, "base seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*run_cmd) return cmd_run(run_args);
    if (*oracle_cmd) return cmd_oracle(oracle_source, oracle_cutset);
    if (*demo_cmd) return cmd_demo(demo_name, demo_trials, demo_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

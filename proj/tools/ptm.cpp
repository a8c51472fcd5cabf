// ptm: predictive trace monitoring from the command line.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "ptm/cli.hpp"

namespace {

void add_inputs(CLI::App* app, ptm::RunConfig& c, bool needs_spec) {
  app->add_option("--trace", c.trace, "Trace file (one '<thread> <op>' per line)")->required();
  app->add_option("--alphabet", c.alphabet, "Alphabet JSON (default: thread partition, no conflicts)");
  if (needs_spec) app->add_option("--spec", c.spec, "Pattern spec JSON");
  app->add_flag("--json", c.json, "Print the report as JSON");
}

void add_baseline_knobs(CLI::App* app, ptm::RunConfig& c) {
  app->add_option("--nfa", c.nfa, "Automaton JSON (instead of --spec)");
  app->add_flag("--early-exit,!--no-early-exit", c.early_exit,
                "Stop at the first accepting prefix (default: iff the automaton is suffix closed)");
  app->add_option("--max-ideals", c.max_ideals, "Ideal budget")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  ptm::RunConfig c;
  CLI::App app{"Predictive monitoring of concurrent executions against pattern languages"};
  app.require_subcommand(1);
  app.add_option("--expansion-cap", c.expansion_cap, "Limit on concrete patterns per spec")
      ->check(CLI::PositiveNumber);

  const std::map<std::string, ptm::Engine> engines{{"vc", ptm::Engine::vc}, {"afterset", ptm::Engine::afterset}};

  auto* mon = app.add_subcommand("monitor", "Streaming pattern monitor");
  add_inputs(mon, c, true);
  mon->get_option("--spec")->required();
  mon->add_option("--engine", c.engine, "Summary engine: vc or afterset")
      ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  mon->add_flag("--witness", c.witness, "Report the matching tuple and a reordering");

  auto* base = app.add_subcommand("baseline", "Ideal-enumeration algorithm for arbitrary automata");
  add_inputs(base, c, true);
  add_baseline_knobs(base, c);

  auto* orc = app.add_subcommand("oracle", "Brute force over all linearizations (small traces)");
  add_inputs(orc, c, true);
  orc->add_option("--nfa", c.nfa, "Automaton JSON (instead of --spec)");
  orc->add_option("--limit", c.oracle_limit, "Linearization cap")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Time an engine, writing CSV checkpoints");
  add_inputs(bench, c, true);
  add_baseline_knobs(bench, c);
  bench->add_option("--algorithm", c.algorithm, "vc, afterset or baseline")
      ->check(CLI::IsMember({"vc", "afterset", "baseline"}));
  bench->add_option("--checkpoint-every", c.checkpoint_every, "Events between CSV rows")
      ->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", c.out, "CSV file (default: stdout)");

  auto* info = app.add_subcommand("info", "Trace statistics");
  add_inputs(info, c, false);
  info->add_flag("--ideals", c.ideals, "Also count the ideals of the trace order");
  info->add_option("--max-ideals", c.max_ideals, "Ideal budget")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);

  auto* ov = gen->add_subcommand("ov", "Orthogonal-vectors reduction instance");
  ov->add_option("--k", c.k, "Number of sets")->check(CLI::Range(2, 16));
  ov->add_option("--d", c.d, "Vector dimension")->check(CLI::PositiveNumber);
  ov->add_option("--n", c.n, "Vectors per set")->check(CLI::PositiveNumber);
  ov->add_option("--density", c.density, "Probability of a 1 coordinate")->check(CLI::Range(0.0, 1.0));
  ov->add_option("--seed", c.seed, "Random seed");
  ov->add_flag("--example", c.example, "Use the fixed 3x3x3 example instance");
  ov->add_option("--out", c.out, "Output prefix")->required();

  auto* rnd = gen->add_subcommand("random", "Random trace and alphabet");
  rnd->add_option("--threads", c.threads)->check(CLI::PositiveNumber);
  rnd->add_option("--ops", c.ops)->check(CLI::PositiveNumber);
  rnd->add_option("--length", c.length);
  rnd->add_option("--conflict-probability", c.conflict_probability)->check(CLI::Range(0.0, 1.0));
  rnd->add_option("--seed", c.seed);
  rnd->add_option("--out", c.out, "Output prefix")->required();

  auto* pat = gen->add_subcommand("pattern", "Sample a pattern from a trace");
  pat->add_option("--trace", c.trace)->required();
  pat->add_option("--alphabet", c.alphabet);
  pat->add_option("--dim", c.dim)->check(CLI::PositiveNumber);
  pat->add_option("--policy", c.policy)
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ptm::SamplePolicy>{{"locality", ptm::SamplePolicy::locality},
                                                   {"diversity", ptm::SamplePolicy::diversity}},
          CLI::ignore_case));
  pat->add_option("--seed", c.seed);
  pat->add_option("--out", c.out, "Spec file (default: stdout)");

  auto* race = gen->add_subcommand("race-nfa", "Automaton for adjacent conflicting accesses");
  race->add_option("--threads", c.thread_names, "Thread names")->required()->delimiter(',');
  race->add_option("--vars", c.vars, "Variable names")->required()->delimiter(',');
  race->add_option("--out", c.out, "Automaton file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ptm::exit_usage;
  }

  for (auto* sub : {mon, base, orc, bench, info})
    if (sub->parsed()) c.command = sub->get_name();
  if (gen->parsed()) {
    c.command = "gen";
    for (auto* sub : {ov, rnd, pat, race})
      if (sub->parsed()) c.gen_kind = sub->get_name();
  }
  return ptm::run(c, std::cout, std::cerr);
}

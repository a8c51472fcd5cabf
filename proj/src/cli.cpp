#include "ptm/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ptm/error.hpp"
#include "ptm/io.hpp"

namespace ptm {

using nlohmann::json;

void RunConfig::validate() const {
  static const std::set<std::string> commands{"monitor", "baseline", "oracle", "gen", "bench", "info"};
  if (!commands.contains(command)) throw Error(ErrorCode::validation, "unknown command '" + command + "'");
  if (max_ideals == 0 || expansion_cap == 0 || oracle_limit == 0)
    throw Error(ErrorCode::validation, "budgets must be positive");
  if (command == "gen") {
    static const std::set<std::string> kinds{"ov", "random", "pattern", "race-nfa"};
    if (!kinds.contains(gen_kind)) throw Error(ErrorCode::validation, "unknown generator '" + gen_kind + "'");
    if ((gen_kind == "ov" || gen_kind == "random") && !out)
      throw Error(ErrorCode::validation, "gen " + gen_kind + " needs --out PREFIX");
    if (gen_kind == "pattern" && !trace) throw Error(ErrorCode::validation, "gen pattern needs --trace");
    return;
  }
  if (!trace) throw Error(ErrorCode::validation, command + " needs --trace");
  if (command == "monitor" && !spec) throw Error(ErrorCode::validation, "monitor needs --spec");
  if ((command == "baseline" || command == "oracle") && !spec && !nfa)
    throw Error(ErrorCode::validation, command + " needs --spec or --nfa");
  if (command == "bench") {
    if (!spec && !nfa) throw Error(ErrorCode::validation, "bench needs --spec or --nfa");
    if (checkpoint_every == 0) throw Error(ErrorCode::validation, "bench needs --checkpoint-every N (N > 0)");
    if (algorithm != "vc" && algorithm != "afterset" && algorithm != "baseline")
      throw Error(ErrorCode::validation, "unknown bench algorithm '" + algorithm + "'");
    if (algorithm != "baseline" && !spec) throw Error(ErrorCode::validation, "monitor engines need a pattern --spec");
  }
}

namespace {

const char* verdict_name(bool matched) { return matched ? "MATCH" : "NO_MATCH"; }

Trace load_trace(const RunConfig& c) { return parse_trace_file(*c.trace, parse_alphabet_file(c.alphabet)); }

GeneralizedPattern load_pattern(const RunConfig& c) {
  auto spec = parse_spec_file(*c.spec);
  if (auto* g = std::get_if<GeneralizedPattern>(&spec)) return std::move(*g);
  throw Error(ErrorCode::validation, *c.spec + ": expected a pattern spec, found an automaton");
}

/// Automaton from --nfa, or compiled from the --spec pattern.
Nfa load_nfa(const RunConfig& c) {
  auto spec = parse_spec_file(c.nfa ? *c.nfa : *c.spec);
  if (auto* n = std::get_if<Nfa>(&spec)) return std::move(*n);
  return generalized_to_nfa(std::get<GeneralizedPattern>(spec), c.expansion_cap);
}

Spec load_spec(const RunConfig& c) { return parse_spec_file(c.nfa ? *c.nfa : *c.spec); }

std::string join_ids(const std::vector<EventId>& ids) {
  std::ostringstream ss;
  ss << '[';
  for (std::size_t i = 0; i < ids.size(); ++i) ss << (i ? " " : "") << ids[i];
  ss << ']';
  return ss.str();
}

void emit(std::ostream& out, const RunConfig& c, bool matched, std::size_t events, const json& stats,
          const std::optional<Witness>& witness = std::nullopt) {
  if (c.json) {
    json j{{"verdict", verdict_name(matched)}, {"events_processed", events}};
    if (witness)
      j["witness"] = {{"disjunct", witness->disjunct},
                      {"tuple", witness->tuple},
                      {"target", witness->target},
                      {"reordering", witness->reordering}};
    j["stats"] = stats;
    out << j.dump() << '\n';
    return;
  }
  out << verdict_name(matched) << " after " << events << " events\n";
  if (witness) {
    out << "witness: disjunct " << witness->disjunct << ", tuple " << join_ids(witness->tuple) << ", pattern order "
        << join_ids(witness->target) << '\n';
    if (!witness->reordering.empty()) out << "reordering: " << join_ids(witness->reordering) << '\n';
  }
  for (const auto& [k, v] : stats.items()) out << "  " << k << ": " << v.dump() << '\n';
}

int cmd_monitor(const RunConfig& c, std::ostream& out) {
  const auto trace = load_trace(c);
  const auto g = load_pattern(c);
  MonitorOptions opt{c.engine, c.witness, c.expansion_cap};
  const auto r = monitor(trace, g, opt);
  json stats{{"engine", c.engine == Engine::vc ? "vc" : "afterset"},
             {"monitors", r.monitors},
             {"peak_entries", r.peak_entries},
             {"trace_events", trace.size()}};
  emit(out, c, r.matched, r.events_processed, stats, c.witness ? r.witness : std::nullopt);
  return r.matched ? exit_match : exit_no_match;
}

int cmd_baseline(const RunConfig& c, std::ostream& out) {
  const auto trace = load_trace(c);
  const auto nfa = load_nfa(c);
  const auto r = bertoni(trace, nfa, {c.early_exit, c.max_ideals});
  json stats{{"ideals", r.ideals}, {"early_exit", r.early_exit}, {"trace_events", trace.size()}};
  emit(out, c, r.matched, r.events_processed, stats);
  return r.matched ? exit_match : exit_no_match;
}

int cmd_oracle(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto trace = load_trace(c);
  const auto spec = load_spec(c);
  const auto v = predictive_membership_bruteforce(trace, spec, c.oracle_limit);
  if (v.truncated) {
    err << "error: linearization limit of " << c.oracle_limit << " reached without a verdict\n";
    return exit_budget;
  }
  emit(out, c, v.member, trace.size(), json{{"linearizations", v.examined}});
  return v.member ? exit_match : exit_no_match;
}

int cmd_info(const RunConfig& c, std::ostream& out) {
  const auto trace = load_trace(c);
  std::set<LabelId> labels(trace.label_ids().begin(), trace.label_ids().end());
  std::set<ThreadId> threads;
  for (auto l : labels) threads.insert(trace.alphabet().thread_of(l));
  json j{{"events", trace.size()},
         {"threads", threads.size()},
         {"labels", labels.size()},
         {"alphabet_labels", trace.alphabet().size()},
         {"width", trace.alphabet().width()}};
  if (c.ideals) j["ideal_count"] = ideal_count(trace, c.max_ideals);
  if (c.json) {
    out << j.dump() << '\n';
  } else {
    for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << '\n';
  }
  return exit_match;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
  if (c.gen_kind == "ov") {
    const auto inst = c.example ? ov_example_instance() : random_ov_instance(c.k, c.d, c.n, c.seed, c.density);
    const auto red = gen_ov(inst);
    std::ostringstream trace;
    write_trace(trace, red.trace);
    write_file(*c.out + ".trace", trace.str());
    write_file(*c.out + ".alphabet.json", alphabet_to_json(red.trace.alphabet()));
    write_file(*c.out + ".nfa.json", nfa_to_json(red.nfa));
    std::ostringstream vectors;
    for (const auto& set : inst.sets) {
      for (std::size_t l = 0; l < set.size(); ++l) {
        for (bool b : set[l]) vectors << (b ? '1' : '0');
        vectors << (l + 1 == set.size() ? '\n' : ' ');
      }
    }
    write_file(*c.out + ".ov", vectors.str());
    out << "wrote " << *c.out << ".{trace,alphabet.json,nfa.json,ov} (" << red.trace.size() << " events, "
        << (ov_bruteforce(inst.sets) ? "orthogonal choice exists" : "no orthogonal choice") << ")\n";
    return exit_match;
  }
  if (c.gen_kind == "random") {
    const auto t = gen_random_trace(c.threads, c.ops, c.length, c.seed, c.conflict_probability);
    std::ostringstream trace;
    write_trace(trace, t);
    write_file(*c.out + ".trace", trace.str());
    write_file(*c.out + ".alphabet.json", alphabet_to_json(t.alphabet()));
    out << "wrote " << *c.out << ".{trace,alphabet.json} (" << t.size() << " events)\n";
    return exit_match;
  }
  std::string doc;
  if (c.gen_kind == "pattern") {
    const auto trace = load_trace(c);
    const auto s = sample_pattern(trace, c.dim, c.policy, c.seed);
    doc = pattern_to_json(GeneralizedPattern::of(s.pattern));
    if (s.fallback) out << "note: locality window shorter than the pattern; sampled from the whole trace\n";
  } else {
    if (c.thread_names.size() < 2 || c.vars.empty())
      throw Error(ErrorCode::validation, "gen race-nfa needs --threads with >= 2 names and --vars");
    doc = nfa_to_json(race_nfa(c.thread_names, c.vars));
  }
  if (c.out)
    write_file(*c.out, doc);
  else
    out << doc;
  return exit_match;
}

int cmd_bench(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto trace = load_trace(c);
  std::unique_ptr<std::ofstream> file;
  if (c.out) {
    file = std::make_unique<std::ofstream>(*c.out);
    if (!*file) throw Error(ErrorCode::validation, "cannot write '" + *c.out + "'");
  }
  std::ostream& csv = file ? *file : out;
  csv << "events,wall_ms,entries,verdict\n";

  std::optional<GeneralizedMonitor> mon;
  std::optional<BertoniMonitor> bert;
  if (c.algorithm == "baseline") {
    bert.emplace(trace.alphabet(), load_nfa(c), BertoniOptions{c.early_exit, c.max_ideals});
  } else {
    mon.emplace(trace.alphabet(), load_pattern(c), c.algorithm == "afterset" ? Engine::afterset : Engine::vc,
                c.expansion_cap);
  }
  const auto entries = [&] { return mon ? mon->entry_count() : bert->memo_size(); };
  const auto start = std::chrono::steady_clock::now();
  const auto row = [&](std::size_t events, const char* verdict) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    csv << events << ',' << std::fixed << std::setprecision(3) << ms.count() << ',' << entries() << ',' << verdict
        << '\n';
  };

  // One row per completed checkpoint interval (the last one possibly
  // partial), then a terminal row carrying the final verdict.
  std::size_t processed = 0;
  bool matched = mon ? mon->matched() : (bert->early_exit() && bert->matched());
  const auto status = [&] { return matched ? "MATCH" : "PENDING"; };
  try {
    while (processed < trace.size() && !matched) {
      const auto l = trace.label_id(processed);
      matched = mon ? mon->step(l) : bert->step(l);
      ++processed;
      if (processed % c.checkpoint_every == 0) row(processed, status());
    }
    if (processed % c.checkpoint_every != 0) row(processed, status());
    matched = mon ? (mon->finish(), mon->matched()) : bert->finish();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget_exceeded) throw;
    row(processed, "BUDGET_EXCEEDED");
    err << "error: " << e.what() << '\n';
    return exit_budget;
  }
  row(processed, verdict_name(matched));
  return matched ? exit_match : exit_no_match;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    c.validate();
    if (c.command == "monitor") return cmd_monitor(c, out);
    if (c.command == "baseline") return cmd_baseline(c, out);
    if (c.command == "oracle") return cmd_oracle(c, out, err);
    if (c.command == "info") return cmd_info(c, out);
    if (c.command == "gen") return cmd_gen(c, out);
    return cmd_bench(c, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::budget_exceeded ? exit_budget : exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace ptm

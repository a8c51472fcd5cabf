// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "ptm/algebra.hpp"
#include "ptm/baseline.hpp"
#include "ptm/cli.hpp"
#include "ptm/error.hpp"
#include "ptm/gen.hpp"
#include "ptm/io.hpp"
#include "ptm/monitor.hpp"
#include "ptm/nfa.hpp"
#include "ptm/oracle.hpp"
#include "ptm/order.hpp"
#include "support.hpp"

using namespace ptm;
using ptm::test::L;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
double time_it(F&& f) {
  const auto start = Clock::now();
  f();
  return seconds_since(start);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string data(const std::string& name) { return std::string(PTM_TEST_DATA) + "/" + name; }

// Pattern of `dim` labels taken from random events of `t`.
Pattern pattern_from_events(std::mt19937_64& rng, const Trace& t, std::size_t dim) {
  std::uniform_int_distribution<EventId> pick(0, t.size() - 1);
  Word w;
  for (std::size_t i = 0; i < dim; ++i) w.push_back(t.label(pick(rng)));
  return Pattern::of(w);
}

// Three labels, the last of which never occurs, so nothing ever matches.
GeneralizedPattern unmatchable_pattern() {
  return GeneralizedPattern::of(Word{L("t1", "o1"), L("t2", "o2"), L("t_absent", "o_absent")});
}

// ---------------------------------------------------------------------------

Outcome oracle_agreement() {
  std::mt19937_64 rng(20240601);
  int matches = 0;
  for (int round = 0; round < 500; ++round) {
    const auto t = ptm::test::random_small_trace(rng, 3, 3, 9, 1);
    const auto p = pattern_from_events(rng, t, std::uniform_int_distribution<std::size_t>(1, 3)(rng));
    const auto g = GeneralizedPattern::of(p);
    const bool as = monitor(t, g, {Engine::afterset}).matched;
    const bool vc = monitor(t, g, {Engine::vc}).matched;
    const bool bt = bertoni(t, pattern_to_nfa(p)).matched;
    const auto oracle = predictive_membership_bruteforce(t, g);
    if (oracle.truncated) return {false, fmt("instance %d: oracle truncated", round)};
    if (as != oracle.member || vc != oracle.member || bt != oracle.member)
      return {false, fmt("instance %d: afterset=%d vc=%d bertoni=%d oracle=%d", round, as, vc, bt, oracle.member)};
    matches += oracle.member;
  }
  return {true, fmt("500 instances, %d matches, all four engines agree", matches)};
}

Outcome reset_play_example() {
  const auto t = parse_trace_file(data("sigma_safe.trace"), parse_alphabet_file(data("iex.json")));
  const auto g = std::get<GeneralizedPattern>(parse_spec_file(data("lfail.json")));
  if (t.size() != 14) return {false, fmt("expected 14 events, read %zu", t.size())};
  const bool plain = word_membership(generalized_to_nfa(g), t.word());
  const auto r = monitor(t, g);
  if (plain || !r.matched) return {false, fmt("membership=%d predictive=%d", plain, r.matched)};
  // The witness must be an equivalent execution whose word is in the language.
  const auto prefix = t.prefix(r.events_processed);
  Word reordered;
  for (auto e : r.witness->reordering) reordered.push_back(t.label(e));
  for (std::size_t i = 0; i < r.witness->reordering.size(); ++i)
    for (std::size_t j = i + 1; j < r.witness->reordering.size(); ++j)
      if (happens_before(prefix, r.witness->reordering[j], r.witness->reordering[i]))
        return {false, "witness reordering violates the trace order"};
  if (!word_membership(generalized_to_nfa(g), reordered)) return {false, "witness word not in the language"};
  return {true, fmt("membership NO, predictive MATCH after %zu events", r.events_processed)};
}

Outcome ov_reduction() {
  int yes = 0, count = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed, ++count) {
    const std::size_t k = 2 + seed % 2, n = 1 + seed % 4, d = 3;
    const auto inst = random_ov_instance(k, d, n, seed);
    const auto red = gen_ov(inst);
    if (red.trace.size() > k * n * (d + 1)) return {false, fmt("seed %llu: trace too long", (unsigned long long)seed)};
    if (red.trace.alphabet().width() != k) return {false, fmt("seed %llu: width != k", (unsigned long long)seed)};
    const bool expected = ov_bruteforce(inst.sets);
    if (bertoni(red.trace, red.nfa).matched != expected)
      return {false, fmt("seed %llu: bertoni disagrees with ov_bruteforce", (unsigned long long)seed)};
    yes += expected;
  }
  const auto ex = gen_ov(ov_example_instance());
  if (ex.trace.size() != 17) return {false, fmt("example trace has %zu events", ex.trace.size())};
  if (!bertoni(ex.trace, ex.nfa).matched) return {false, "example instance does not match"};
  return {true, fmt("%d instances (%d with an orthogonal choice); example: 17 events, MATCH", count, yes)};
}

Outcome linear_scaling() {
  const auto g = unmatchable_pattern();
  // Same generator draw for both sizes, so only the length differs.
  const auto large = gen_random_trace(4, 4, 200'000, 11);
  const auto small = large.prefix(100'000);
  std::size_t peak = 0;
  const auto best = [&](const Trace& t) {
    double best_time = 1e9;
    for (int rep = 0; rep < 7; ++rep) {
      MatchReport r;
      best_time = std::min(best_time, time_it([&] { r = monitor(t, g); }));
      if (r.matched) return -1.0;
      peak = std::max(peak, r.peak_entries);
    }
    return best_time;
  };
  const double t1 = best(small), t2 = best(large);
  if (t1 < 0 || t2 < 0) return {false, "pattern unexpectedly matched"};
  const double ratio = t2 / t1;
  const bool ok = ratio >= 1.5 && ratio <= 3.0 && peak <= key_bound(3);
  return {ok, fmt("1e5: %.1f ms, 2e5: %.1f ms, ratio %.2f (want [1.5, 3.0]); peak entries %zu (bound %zu)", t1 * 1e3,
                  t2 * 1e3, ratio, peak, key_bound(3))};
}

Outcome thread_scaling() {
  const auto g = unmatchable_pattern();
  std::vector<double> per_event;
  std::string detail;
  for (std::size_t threads : {5, 10, 20}) {
    const auto t = gen_random_trace(threads, 4, 1'000'000, 100 + threads);
    double best = 1e9;
    for (int rep = 0; rep < 3; ++rep) best = std::min(best, time_it([&] { (void)monitor(t, g); }));
    per_event.push_back(best / 1e6);
    detail += fmt("%zu threads: %.1f ns/event; ", threads, best * 1e3);
  }
  const bool ok = std::is_sorted(per_event.begin(), per_event.end());
  detail += ok ? "nondecreasing" : "NOT monotone";
  return {ok, detail};
}

Outcome baseline_blowup() {
  // No conflicts: the threads never synchronize, the regime where the number
  // of ideals grows like the product of the thread lengths.
  const auto t = gen_random_trace(3, 4, 3000, 7, 0.0);
  const auto g = unmatchable_pattern();
  const auto dir = std::filesystem::temp_directory_path() / ("ptm_accept_" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  std::ostringstream trace_text;
  write_trace(trace_text, t);
  write_file((dir / "t.trace").string(), trace_text.str());
  write_file((dir / "t.alphabet.json").string(), alphabet_to_json(t.alphabet()));
  write_file((dir / "p.json").string(), pattern_to_json(g));

  RunConfig c;
  c.command = "baseline";
  c.trace = (dir / "t.trace").string();
  c.alphabet = (dir / "t.alphabet.json").string();
  c.spec = (dir / "p.json").string();
  c.max_ideals = 1'000'000;
  std::ostringstream out, err;
  int code = 0;
  const double bt = time_it([&] { code = run(c, out, err); });
  std::filesystem::remove_all(dir);

  MatchReport r;
  const double pt = time_it([&] { r = monitor(t, g); });
  const bool diag = err.str().find("budget") != std::string::npos;
  const bool ok = code == exit_budget && diag && !r.matched && r.events_processed == t.size() && pt < 1.0;
  return {ok, fmt("bertoni: exit %d after %.2f s (%s); pattern monitor: NO_MATCH over %zu events in %.1f ms", code, bt,
                  diag ? "budget diagnostic" : "no diagnostic", r.events_processed, pt * 1e3)};
}

Outcome exhaustive_invariants() {
  const std::vector<std::vector<OpPair>> conflict_lists{
      {}, {{"o1", "o1"}}, {{"o1", "o2"}}, {{"o1", "o1"}, {"o2", "o2"}}, {{"o1", "o1"}, {"o1", "o2"}, {"o2", "o2"}}};
  std::size_t traces = 0, tuples = 0, keys = 0;
  std::string failure;
  for (const auto& conflicts : conflict_lists) {
    const auto alphabet = ptm::test::grid_alphabet(2, 2, conflicts);
    std::vector<Word> patterns;
    for (std::size_t dim = 1; dim <= 3; ++dim) {
      std::vector<LabelId> ids(dim, 0);
      while (true) {
        Word w;
        for (auto id : ids) w.push_back(alphabet->label(id));
        patterns.push_back(w);
        std::size_t i = 0;
        while (i < dim && ++ids[i] == alphabet->size()) ids[i++] = 0;
        if (i == dim) break;
      }
    }
    ptm::test::for_each_trace(alphabet, 6, [&](const Trace& t) {
      if (!failure.empty()) return;
      ++traces;
      const auto rel = ptm::test::order_closure(t);
      // (a) after sets, (b) vector clocks.
      std::vector<AfterSet> sets;
      const auto clocks = vc_stream(t);
      for (EventId f = 0; f < t.size(); ++f) {
        for (auto& s : sets) after_set_step(s, t.label_id(f), t.alphabet());
        sets.push_back(after_set_new(t.label_id(f), t.alphabet()));
        for (EventId e = 0; e <= f; ++e) {
          AfterSet def(t.alphabet().size());
          for (EventId g = e; g <= f; ++g)
            if (rel[e][g]) def.set(t.label_id(g));
          if (!(sets[e] == def)) failure = "(a) after set mismatch";
          if (vc_leq(clocks[e], clocks[f]) != static_cast<bool>(rel[e][f])) failure = "(b) vector clock mismatch";
        }
      }
      // (c) admissibility, on tuples of up to 3 events in every target order.
      const auto n = t.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << n) && failure.empty(); ++mask) {
        std::vector<EventId> tuple;
        for (EventId e = 0; e < n; ++e)
          if (mask >> e & 1) tuple.push_back(e);
        if (tuple.size() > 3) continue;
        Word slot_labels;
        for (auto e : tuple) slot_labels.push_back(t.label(e));
        auto chain = tuple;
        do {
          Word target;
          for (auto e : chain) target.push_back(t.label(e));
          const auto perm = sort_to_target<Label>(slot_labels, target);
          std::vector<EventId> induced;
          for (auto s : perm.order) induced.push_back(tuple[s]);
          const bool adm = check_admissible(t, {tuple}, target);
          if (adm != ptm::test::chain_acyclic(t, induced) || adm != ptm::test::linearization_contains(t, induced))
            failure = "(c) admissibility mismatch";
          ++tuples;
        } while (std::next_permutation(chain.begin(), chain.end()));
      }
      // (d) stored maxima, (e) join closure. Every prefix is itself an
      // enumerated trace, so checking the final state covers all prefixes.
      if (n > 5) return;
      for (const auto& w : patterns) {
        const auto brute = ptm::test::brute_maxima(t, w);
        if (!brute.closed_under_join) failure = "(e) admissible tuples not closed under join";
        AfterSetMonitor as(t.alphabet(), Pattern::of(w));
        VectorClockMonitor vc(t.alphabet(), Pattern::of(w));
        for (auto l : t.label_ids()) {
          as.step(l);
          vc.step(l);
        }
        const auto check = [&](const auto& m) {
          std::map<std::vector<std::size_t>, std::vector<EventId>> got;
          for (const auto& e : m.entries()) got[e.positions] = e.events;
          if (got != brute.maxima) failure = "(d) stored tuples differ from brute-force maxima";
        };
        check(as);
        check(vc);
        keys += brute.maxima.size();
      }
    });
    if (!failure.empty()) break;
  }
  if (!failure.empty()) return {false, failure};
  return {true, fmt("%zu traces, %zu tuple/target checks, %zu key maxima", traces, tuples, keys)};
}

Outcome closure_algebra() {
  const auto a = L("t", "a"), b = L("t", "b");
  const std::vector<GeneralizedPattern> family{
      GeneralizedPattern::of(EmptyLang{}),     GeneralizedPattern::of(EpsilonLang{}),
      GeneralizedPattern::of(Word{}),          GeneralizedPattern::of(Word{a}),
      GeneralizedPattern::of(Word{b}),         GeneralizedPattern::of(Word{a, b}),
      GeneralizedPattern::of(Word{b, a}),      GeneralizedPattern::of(Word{a, a}),
      GeneralizedPattern{{Pattern::of({a, b}), EpsilonLang{}}},
      GeneralizedPattern{{Pattern::of({b, b}), Pattern::of({a})}},
  };
  std::vector<Word> words{{}};
  for (std::size_t len = 1; len <= 4; ++len)
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      Word w;
      for (std::size_t i = 0; i < len; ++i) w.push_back(code >> i & 1 ? b : a);
      words.push_back(w);
    }
  std::size_t checks = 0;
  for (const auto& g1 : family)
    for (const auto& g2 : family) {
      const auto u = gp_union(g1, g2), cat = gp_concat(g1, g2), in = gp_intersect(g1, g2);
      for (const auto& w : words) {
        const bool m1 = word_membership(g1, w), m2 = word_membership(g2, w);
        bool split = false;
        for (std::size_t i = 0; i <= w.size() && !split; ++i)
          split = word_membership(g1, Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i))) &&
                  word_membership(g2, Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()));
        if (word_membership(u, w) != (m1 || m2)) return {false, "union mismatch"};
        if (word_membership(in, w) != (m1 && m2)) return {false, "intersection mismatch"};
        if (word_membership(cat, w) != split) return {false, "concatenation mismatch"};
        checks += 3;
      }
    }
  for (const auto& g : family)
    for (const auto& w : words) {
      if (word_membership(gp_star(g), w) != (word_membership(g, w) || w.empty())) return {false, "star mismatch"};
      ++checks;
    }
  return {true, fmt("%zu membership checks over %zu words", checks, words.size())};
}

Outcome equivalence_invariance() {
  std::mt19937_64 rng(424242);
  int pairs = 0, matched = 0;
  while (pairs < 200) {
    const auto t = ptm::test::random_small_trace(rng, 3, 3, 12, 2);
    std::vector<std::size_t> swappable;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (!t.alphabet().dependent(t.label_id(i), t.label_id(i + 1))) swappable.push_back(i);
    if (swappable.empty()) continue;
    const auto g = GeneralizedPattern::of(pattern_from_events(rng, t, std::uniform_int_distribution<std::size_t>(1, 3)(rng)));
    const auto i = swappable[std::uniform_int_distribution<std::size_t>(0, swappable.size() - 1)(rng)];
    std::vector<EventId> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[i], order[i + 1]);
    const bool before = monitor(t, g).matched, after = monitor(t.permuted(order), g).matched;
    if (before != after) return {false, fmt("pair %d: verdict changed after swapping events %zu and %zu", pairs, i, i + 1)};
    matched += before;
    ++pairs;
  }
  return {true, fmt("200 pairs (%d matching), verdicts unchanged", matched)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle agreement", 60, oracle_agreement},
      {2, "reset/play example", 1, reset_play_example},
      {3, "OV reduction correctness", 120, ov_reduction},
      {4, "linear scaling", 60, linear_scaling},
      {5, "thread scaling", 120, thread_scaling},
      {6, "baseline blow-up", 120, baseline_blowup},
      {7, "exhaustive invariants", 120, exhaustive_invariants},
      {8, "closure algebra", 30, closure_algebra},
      {9, "equivalence invariance", 30, equivalence_invariance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    double elapsed = 0;
    try {
      elapsed = time_it([&] { o = c.run(); });
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (o.pass && elapsed > c.limit_s) o = {false, o.detail + fmt("; exceeded %.0f s", c.limit_s)};
    failed += !o.pass;
    std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, elapsed, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

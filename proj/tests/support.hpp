// Shared fixtures and brute-force references for the test binaries.
#ifndef PTM_TESTS_SUPPORT_HPP
#define PTM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <map>

#include "ptm/alphabet.hpp"
#include "ptm/monitor.hpp"
#include "ptm/oracle.hpp"
#include "ptm/order.hpp"
#include "ptm/pattern.hpp"
#include "ptm/trace.hpp"

namespace ptm::test {

inline Label L(const std::string& t, const std::string& op) { return {t, op}; }

inline Trace make_trace(ConcurrentAlphabet a, const std::vector<std::pair<std::string, std::string>>& events) {
  Word w;
  for (const auto& [t, op] : events) w.push_back({t, op});
  return Trace::from_word(std::move(a), w);
}

// TR1 = [(t1,w(x)), (t2,w(x)), (t2,w(y))] with w(x)~w(x).
inline Trace tr1() {
  return make_trace(ConcurrentAlphabet::thread_partition({{"w(x)", "w(x)"}}),
                    {{"t1", "w(x)"}, {"t2", "w(x)"}, {"t2", "w(y)"}});
}
// TR2 = [(t1,a), (t2,b)], independent.
inline Trace tr2() { return make_trace(ConcurrentAlphabet::thread_partition(), {{"t1", "a"}, {"t2", "b"}}); }
// TR3 = [(t1,a), (t1,b)], program order.
inline Trace tr3() { return make_trace(ConcurrentAlphabet::thread_partition(), {{"t1", "a"}, {"t1", "b"}}); }

/// Thread-partition alphabet over threads t1..tT and ops o1..oO with the
/// given conflicts, every label registered thread-major.
inline std::shared_ptr<const ConcurrentAlphabet> grid_alphabet(std::size_t threads, std::size_t ops,
                                                               const std::vector<OpPair>& conflicts) {
  auto a = std::make_shared<ConcurrentAlphabet>(ConcurrentAlphabet::thread_partition(conflicts));
  for (std::size_t t = 0; t < threads; ++t)
    for (std::size_t o = 0; o < ops; ++o) a->intern({"t" + std::to_string(t + 1), "o" + std::to_string(o + 1)});
  return a;
}

/// Calls f on every trace over `alphabet` of every length in [0, max_len].
inline void for_each_trace(const std::shared_ptr<const ConcurrentAlphabet>& alphabet, std::size_t max_len,
                           const std::function<void(const Trace&)>& f) {
  const auto k = static_cast<LabelId>(alphabet->size());
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<LabelId> labels(len, 0);
    while (true) {
      f(Trace(alphabet, labels));
      std::size_t i = 0;
      while (i < len && ++labels[i] == k) labels[i++] = 0;
      if (i == len) break;
    }
  }
}

/// Transitive closure of the trace order, by definition: e before f with
/// dependent labels, closed transitively. rel[e][f] means e <= f.
inline std::vector<std::vector<char>> order_closure(const Trace& t) {
  const auto n = t.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (EventId e = 0; e < n; ++e) {
    rel[e][e] = 1;
    for (EventId f = e + 1; f < n; ++f)
      if (t.alphabet().dependent(t.label_id(e), t.label_id(f))) rel[e][f] = 1;
  }
  for (EventId k = 0; k < n; ++k)
    for (EventId i = 0; i < n; ++i)
      if (rel[i][k])
        for (EventId j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = 1;
  return rel;
}

/// Random trace over a random thread-partition alphabet (conflict probability
/// 0.2 per unordered op pair, self pairs included).
inline Trace random_small_trace(std::mt19937_64& rng, std::size_t max_threads, std::size_t max_ops,
                                std::size_t max_len, std::size_t min_len = 0) {
  const std::size_t threads = std::uniform_int_distribution<std::size_t>(1, max_threads)(rng);
  const std::size_t ops = std::uniform_int_distribution<std::size_t>(1, max_ops)(rng);
  std::bernoulli_distribution conflict(0.2);
  std::vector<OpPair> conflicts;
  for (std::size_t a = 0; a < ops; ++a)
    for (std::size_t b = a; b < ops; ++b)
      if (conflict(rng)) conflicts.emplace_back("o" + std::to_string(a + 1), "o" + std::to_string(b + 1));
  auto alphabet = grid_alphabet(threads, ops, conflicts);
  const std::size_t len = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
  std::uniform_int_distribution<LabelId> pick(0, static_cast<LabelId>(alphabet->size() - 1));
  std::vector<LabelId> labels(len);
  for (auto& l : labels) l = pick(rng);
  return Trace(alphabet, labels);
}

/// Pattern of `dim` labels drawn from the alphabet of `t` (with repetition).
inline Pattern random_pattern(std::mt19937_64& rng, const Trace& t, std::size_t dim) {
  std::uniform_int_distribution<LabelId> pick(0, static_cast<LabelId>(t.alphabet().size() - 1));
  Word w;
  for (std::size_t i = 0; i < dim; ++i) w.push_back(t.alphabet().label(pick(rng)));
  return Pattern::of(w);
}

/// Pattern-order target for a tuple whose slot i sits at pattern position
/// positions[i].
inline Word target_of(const Word& pattern, const std::vector<std::size_t>& positions) {
  auto sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  Word w;
  for (auto p : sorted) w.push_back(pattern[p]);
  return w;
}

/// Every (key, tuple) pair over the prefix `t`: keys are sequences of
/// distinct pattern positions whose labels match the slots, equal labels in
/// increasing position order; tuples are strictly increasing event ids.
inline void for_each_candidate(const Trace& t, const Word& pattern,
                               const std::function<void(const std::vector<std::size_t>&,
                                                        const std::vector<EventId>&)>& f) {
  std::vector<std::size_t> pos;
  std::vector<EventId> ev;
  std::function<void(EventId)> rec = [&](EventId from) {
    f(pos, ev);
    if (pos.size() == pattern.size()) return;
    for (EventId e = from; e < t.size(); ++e)
      for (std::size_t p = 0; p < pattern.size(); ++p) {
        if (!(pattern[p] == t.label(e))) continue;
        bool ok = true;
        for (auto q : pos)
          if (q == p || (q > p && pattern[q] == pattern[p])) ok = false;
        if (!ok) continue;
        pos.push_back(p);
        ev.push_back(e);
        rec(e + 1);
        pos.pop_back();
        ev.pop_back();
      }
  };
  rec(0);
}

/// Order graph of `t` plus the chain edges of `chain` has no cycle.
inline bool chain_acyclic(const Trace& t, const std::vector<EventId>& chain) {
  auto rel = order_closure(t);
  const auto n = t.size();
  for (std::size_t k = 1; k < chain.size(); ++k) rel[chain[k - 1]][chain[k]] = 1;
  for (EventId k = 0; k < n; ++k)
    for (EventId i = 0; i < n; ++i)
      if (rel[i][k])
        for (EventId j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = 1;
  for (EventId i = 0; i < n; ++i)
    for (EventId j = i + 1; j < n; ++j)
      if (rel[i][j] && rel[j][i]) return false;
  return true;
}

/// Some linearization of `t` lists `chain` in order.
inline bool linearization_contains(const Trace& t, const std::vector<EventId>& chain) {
  bool found = false;
  LinearizationCursor cursor(t);
  cursor.run([&](const std::vector<EventId>& order) {
    std::size_t k = 0;
    for (auto e : order)
      if (k < chain.size() && e == chain[k]) ++k;
    found = k == chain.size();
    return !found;
  });
  return found;
}

/// Chain of tuple events in target order for a positional key.
inline std::vector<EventId> target_chain(const std::vector<std::size_t>& positions, const std::vector<EventId>& events) {
  std::vector<std::size_t> slots(positions.size());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
  std::sort(slots.begin(), slots.end(), [&](auto a, auto b) { return positions[a] < positions[b]; });
  std::vector<EventId> chain;
  for (auto s : slots) chain.push_back(events[s]);
  return chain;
}

/// For each key, the slotwise maximum of its admissible tuples in `t`, or a
/// failure flag if that maximum is not itself admissible.
struct BruteMaxima {
  std::map<std::vector<std::size_t>, std::vector<EventId>> maxima;
  bool closed_under_join = true;
};

inline BruteMaxima brute_maxima(const Trace& t, const Word& pattern) {
  std::map<std::vector<std::size_t>, std::vector<std::vector<EventId>>> admissible;
  for_each_candidate(t, pattern, [&](const auto& pos, const auto& ev) {
    if (check_admissible(t, CandidateTuple{ev}, target_of(pattern, pos))) admissible[pos].push_back(ev);
  });
  BruteMaxima out;
  for (const auto& [pos, tuples] : admissible) {
    std::vector<EventId> mx(pos.size(), 0);
    for (const auto& tu : tuples)
      for (std::size_t i = 0; i < tu.size(); ++i) mx[i] = std::max(mx[i], tu[i]);
    if (std::find(tuples.begin(), tuples.end(), mx) == tuples.end()) out.closed_under_join = false;
    out.maxima[pos] = mx;
  }
  return out;
}

}  // namespace ptm::test

#endif  // PTM_TESTS_SUPPORT_HPP

#include "ptm/gen.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>

#include "ptm/error.hpp"

namespace ptm {

void OvInstance::validate() const {
  if (k < 1 || d < 1 || n < 1) throw Error(ErrorCode::validation, "OV instance needs k, d, n >= 1");
  if (sets.size() != k)
    throw Error(ErrorCode::validation, "expected " + std::to_string(k) + " sets, got " + std::to_string(sets.size()));
  for (std::size_t i = 0; i < k; ++i) {
    if (sets[i].size() != n)
      throw Error(ErrorCode::validation, "set " + std::to_string(i + 1) + " has " + std::to_string(sets[i].size()) +
                                             " vectors, expected " + std::to_string(n));
    for (const auto& v : sets[i])
      if (v.size() != d)
        throw Error(ErrorCode::validation, "vector of dimension " + std::to_string(v.size()) + " in set " +
                                               std::to_string(i + 1) + ", expected " + std::to_string(d));
  }
}

OvInstance OvInstance::from_strings(const std::vector<std::vector<std::string>>& rows) {
  OvInstance inst;
  inst.k = rows.size();
  inst.n = rows.empty() ? 0 : rows.front().size();
  inst.d = inst.n == 0 ? 0 : rows.front().front().size();
  for (const auto& set : rows) {
    auto& out = inst.sets.emplace_back();
    for (const auto& s : set) {
      BoolVector v;
      for (char c : s) {
        if (c != '0' && c != '1') throw Error(ErrorCode::parse, "OV vector '" + s + "' is not a 0/1 string");
        v.push_back(c == '1');
      }
      out.push_back(std::move(v));
    }
  }
  inst.validate();
  return inst;
}

OvInstance ov_example_instance() {
  return OvInstance::from_strings({{"101", "110", "010"}, {"111", "011", "110"}, {"011", "101", "111"}});
}

OvInstance random_ov_instance(std::size_t k, std::size_t d, std::size_t n, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution one(density);
  OvInstance inst{k, d, n, {}};
  inst.sets.assign(k, std::vector<BoolVector>(n, BoolVector(d)));
  for (auto& set : inst.sets)
    for (auto& v : set)
      for (std::size_t j = 0; j < d; ++j) v[j] = one(rng);
  return inst;
}

std::string ov_thread(std::size_t i) { return "p_" + std::to_string(i); }
std::string ov_op(std::size_t j) { return "a" + std::to_string(j); }

OvReduction gen_ov(const OvInstance& inst) {
  inst.validate();
  if (inst.k < 2) throw Error(ErrorCode::validation, "the reduction needs k >= 2");
  auto alphabet = ConcurrentAlphabet::thread_partition();
  for (std::size_t i = 1; i <= inst.k; ++i) {
    for (std::size_t j = 1; j <= inst.d; ++j) alphabet.intern({ov_thread(i), ov_op(j)});
    alphabet.intern({ov_thread(i), ov_separator});
  }
  Word word;
  for (std::size_t i = 0; i < inst.k; ++i)
    for (const auto& v : inst.sets[i]) {
      for (std::size_t j = 0; j < inst.d; ++j)
        if (!v[j]) word.push_back({ov_thread(i + 1), ov_op(j + 1)});
      word.push_back({ov_thread(i + 1), ov_separator});
    }

  // State 0 loops on anything; state j (1..d) has read a nonempty block of
  // coordinate-j symbols; state d accepts and loops on anything.
  Nfa nfa;
  nfa.state_count = inst.d + 1;
  nfa.initial = {0};
  nfa.accepting = {inst.d};
  const auto block = [&](std::size_t j) {
    OneOf g;
    for (std::size_t i = 1; i <= inst.k; ++i) g.labels.push_back({ov_thread(i), ov_op(j)});
    return g;
  };
  nfa.transitions.push_back({0, AnyLabel{}, 0});
  nfa.transitions.push_back({0, block(1), 1});
  for (std::size_t j = 1; j <= inst.d; ++j) {
    nfa.transitions.push_back({j, block(j), j});
    if (j < inst.d) nfa.transitions.push_back({j, block(j + 1), j + 1});
  }
  nfa.transitions.push_back({inst.d, AnyLabel{}, inst.d});
  return {Trace::from_word(std::move(alphabet), word), std::move(nfa)};
}

Trace gen_random_trace(std::size_t threads, std::size_t ops, std::size_t length, std::uint64_t seed,
                       double conflict_probability) {
  if (threads < 1 || ops < 1) throw Error(ErrorCode::validation, "random traces need at least one thread and op");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution conflict(conflict_probability);
  const auto op_name = [](std::size_t o) { return "o" + std::to_string(o + 1); };
  std::vector<OpPair> conflicts;
  for (std::size_t a = 0; a < ops; ++a)
    for (std::size_t b = a; b < ops; ++b)
      if (conflict(rng)) conflicts.emplace_back(op_name(a), op_name(b));
  auto alphabet = std::make_shared<ConcurrentAlphabet>(ConcurrentAlphabet::thread_partition(conflicts));
  for (std::size_t t = 0; t < threads; ++t)
    for (std::size_t o = 0; o < ops; ++o) alphabet->intern({"t" + std::to_string(t + 1), op_name(o)});
  std::uniform_int_distribution<LabelId> pick(0, static_cast<LabelId>(threads * ops - 1));
  std::vector<LabelId> labels(length);
  for (auto& l : labels) l = pick(rng);
  return Trace(std::move(alphabet), std::move(labels));
}

std::pair<std::size_t, std::size_t> locality_window(std::size_t n, std::size_t parts, std::size_t i) {
  return {i * n / parts, (i + 1) * n / parts};
}

SampledPattern sample_pattern(const Trace& trace, std::size_t dim, SamplePolicy policy, std::uint64_t seed) {
  if (trace.empty()) throw Error(ErrorCode::validation, "cannot sample a pattern from an empty trace");
  if (dim < 1 || dim > trace.size())
    throw Error(ErrorCode::validation, "pattern dimension must lie in [1, " + std::to_string(trace.size()) + "]");
  std::mt19937_64 rng(seed);
  SampledPattern out;
  const std::size_t n = trace.size();

  if (policy == SamplePolicy::locality) {
    const std::size_t parts = std::min<std::size_t>(100, n);
    auto [lo, hi] = locality_window(n, parts, std::uniform_int_distribution<std::size_t>(0, parts - 1)(rng));
    if (hi - lo < dim) {
      lo = 0;
      hi = n;
      out.fallback = true;
    }
    std::vector<EventId> window(hi - lo);
    std::iota(window.begin(), window.end(), lo);
    std::sample(window.begin(), window.end(), std::back_inserter(out.events), dim, rng);
  } else {
    std::vector<std::vector<EventId>> by_thread(trace.alphabet().thread_count());
    for (EventId e = 0; e < n; ++e) by_thread[trace.alphabet().thread_of(trace.label_id(e))].push_back(e);
    std::erase_if(by_thread, [](const auto& v) { return v.empty(); });
    std::shuffle(by_thread.begin(), by_thread.end(), rng);
    while (out.events.size() < dim)
      for (auto& pool : by_thread) {
        if (pool.empty() || out.events.size() == dim) continue;
        const auto k = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
        out.events.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
      }
    std::sort(out.events.begin(), out.events.end());
  }

  Word w;
  for (auto e : out.events) w.push_back(trace.label(e));
  out.pattern = Pattern::of(w);
  return out;
}

Nfa race_nfa(const std::vector<std::string>& threads, const std::vector<std::string>& vars) {
  if (threads.size() < 2 || vars.empty()) throw Error(ErrorCode::validation, "race automaton needs >= 2 threads and a variable");
  Nfa nfa;
  nfa.initial = {0};
  nfa.accepting = {1};
  nfa.state_count = 2;
  nfa.transitions.push_back({0, AnyLabel{}, 0});
  nfa.transitions.push_back({1, AnyLabel{}, 1});
  for (const auto& x : vars) {
    const std::string w = "w(" + x + ")", r = "r(" + x + ")";
    for (const auto& t : threads)
      for (const auto& op : {w, r}) {
        const std::size_t mid = nfa.state_count++;
        nfa.transitions.push_back({0, Label{t, op}, mid});
        OneOf conflicting;
        for (const auto& u : threads) {
          if (u == t) continue;
          conflicting.labels.push_back({u, w});
          if (op == w) conflicting.labels.push_back({u, r});
        }
        nfa.transitions.push_back({mid, std::move(conflicting), 1});
      }
  }
  return nfa;
}

}  // namespace ptm

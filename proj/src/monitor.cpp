#include "ptm/monitor.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <variant>

namespace ptm {

namespace {

void check_tuple(const Trace& trace, const CandidateTuple& tuple) {
  for (std::size_t i = 0; i < tuple.events.size(); ++i) {
    if (tuple.events[i] >= trace.size())
      throw Error(ErrorCode::out_of_range, "tuple event " + std::to_string(tuple.events[i]) + " not in trace");
    if (i > 0 && tuple.events[i] <= tuple.events[i - 1])
      throw Error(ErrorCode::out_of_range, "tuple events must be strictly increasing");
  }
}

Word tuple_labels(const Trace& trace, const CandidateTuple& tuple) {
  Word out;
  for (auto e : tuple.events) out.push_back(trace.label(e));
  return out;
}

void check_same_labels(const Trace& trace, const CandidateTuple& a, const CandidateTuple& b) {
  if (a.events.size() != b.events.size())
    throw Error(ErrorCode::label_mismatch, "tuples have different lengths");
  for (std::size_t i = 0; i < a.events.size(); ++i)
    if (trace.label_id(a.events.at(i)) != trace.label_id(b.events.at(i)))
      throw Error(ErrorCode::label_mismatch, "tuples have different label sequences");
}

}  // namespace

bool check_admissible(const Trace& trace, const CandidateTuple& tuple, const Word& target) {
  check_tuple(trace, tuple);
  const auto labels = tuple_labels(trace, tuple);
  const auto perm = sort_to_target<Label>(labels, target);
  const auto& alphabet = trace.alphabet();

  const auto m = tuple.events.size();
  std::vector<AfterSet> after(m);
  std::size_t seen = 0;  // slots whose event has arrived
  const EventId last = m == 0 ? 0 : tuple.events.back() + 1;
  for (EventId id = 0; id < last; ++id) {
    const auto f = trace.label_id(id);
    for (std::size_t s = 0; s < seen; ++s) after_set_step(after[s], f, alphabet);
    if (seen < m && tuple.events[seen] == id) {
      after[seen] = after_set_new(f, alphabet);
      for (std::size_t r = 0; r < seen; ++r)
        if (perm.rank[seen] < perm.rank[r] && afterset_causality(after[r], f)) return false;
      ++seen;
    }
  }
  return true;
}

CandidateTuple tuple_join(const Trace& trace, const CandidateTuple& a, const CandidateTuple& b) {
  check_same_labels(trace, a, b);
  CandidateTuple out;
  for (std::size_t i = 0; i < a.events.size(); ++i) out.events.push_back(std::max(a.events[i], b.events[i]));
  return out;
}

bool tuple_leq(const Trace& trace, const CandidateTuple& a, const CandidateTuple& b) {
  check_same_labels(trace, a, b);
  for (std::size_t i = 0; i < a.events.size(); ++i)
    if (a.events[i] > b.events[i]) return false;
  return true;
}

std::vector<EventId> witness_reordering(const Trace& trace, std::span<const EventId> chain) {
  const auto n = trace.size();
  auto preds = immediate_predecessors(trace);
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (chain[k] >= n || chain[k - 1] >= n)
      throw Error(ErrorCode::out_of_range, "chain event outside the trace");
    preds[chain[k]].push_back(chain[k - 1]);
  }
  std::vector<std::vector<EventId>> succs(n);
  std::vector<std::size_t> pending(n, 0);
  for (EventId y = 0; y < n; ++y) {
    auto& p = preds[y];
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    pending[y] = p.size();
    for (auto x : p) succs[x].push_back(y);
  }
  std::priority_queue<EventId, std::vector<EventId>, std::greater<>> ready;
  for (EventId y = 0; y < n; ++y)
    if (pending[y] == 0) ready.push(y);
  std::vector<EventId> out;
  out.reserve(n);
  while (!ready.empty()) {
    const auto x = ready.top();
    ready.pop();
    out.push_back(x);
    for (auto y : succs[x])
      if (--pending[y] == 0) ready.push(y);
  }
  if (out.size() != n)
    throw Error(ErrorCode::internal, "witness chain contradicts the trace order (cycle detected)");
  return out;
}

std::vector<EventId> witness_reordering(const Trace& trace, const CandidateTuple& tuple, const Word& target) {
  check_tuple(trace, tuple);
  const auto labels = tuple_labels(trace, tuple);
  const auto perm = sort_to_target<Label>(labels, target);
  std::vector<EventId> chain;
  for (auto s : perm.order) chain.push_back(tuple.events[s]);
  return witness_reordering(trace, chain);
}

// ---------------------------------------------------------------------------

std::size_t key_bound(std::size_t d) {
  std::size_t total = 0, term = 1;
  for (std::size_t m = 0; m <= d; ++m) {
    total += term;
    term *= d - m;
  }
  return total;
}

template <class Policy>
PatternMonitor<Policy>::PatternMonitor(const ConcurrentAlphabet& alphabet, const Pattern& pattern)
    : policy_(alphabet) {
  const auto word = pattern.word();
  if (word.size() > max_pattern_dimension)
    throw Error(ErrorCode::validation, "pattern dimension " + std::to_string(word.size()) + " exceeds " +
                                           std::to_string(max_pattern_dimension));
  for (const auto& l : word) pattern_.push_back(alphabet.find(l));
  by_length_.resize(word.size() + 1);
  by_length_[0].emplace(Key{0}, Entry{});
  if (word.empty()) {
    match_prefix_ = 0;
    first_match_ = MonitorEntry{};
  }
}

template <class Policy>
std::vector<std::size_t> PatternMonitor<Policy>::decode(Key k) {
  std::vector<std::size_t> out;
  for (; k != 0; k >>= 4) out.push_back(static_cast<std::size_t>(k & 0xF) - 1);
  return out;
}

template <class Policy>
void PatternMonitor<Policy>::step(LabelId f) {
  const EventId id = events_processed_;
  policy_.advance(f);
  if constexpr (Policy::refreshes) {
    for (auto& bucket : by_length_)
      for (auto& [key, entry] : bucket)
        for (auto& slot : entry.slots) policy_.refresh(slot.summary, f);
  }

  const auto d = pattern_.size();
  std::vector<std::size_t> candidates;
  for (std::size_t p = 0; p < d; ++p)
    if (pattern_[p] == f) candidates.push_back(p);

  if (!candidates.empty()) {
    const Summary fresh = policy_.capture(f);
    for (std::size_t m = d; m-- > 0;) {
      for (const auto& [key, entry] : by_length_[m]) {
        const auto positions = decode(key);
        for (auto p : candidates) {
          bool valid = true;
          for (auto q : positions)
            if (q == p || (q > p && pattern_[q] == f)) valid = false;
          if (!valid) continue;
          // Slots that the target places after f must not happen before f.
          bool admissible = true;
          for (std::size_t i = 0; i < m && admissible; ++i)
            if (positions[i] > p && policy_.ordered_before(entry.slots[i].summary, f)) admissible = false;
          if (!admissible) continue;
          Entry next;
          next.slots.reserve(m + 1);
          next.slots = entry.slots;
          next.slots.push_back({id, fresh});
          by_length_[m + 1].insert_or_assign(extend_key(key, m, p), std::move(next));
        }
      }
    }
  }

  ++events_processed_;
  peak_entries_ = std::max(peak_entries_, entry_count());
  if (!match_prefix_ && !by_length_[d].empty()) {
    match_prefix_ = events_processed_;
    // Smallest key for a deterministic witness.
    auto best = std::min_element(by_length_[d].begin(), by_length_[d].end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
    MonitorEntry e{decode(best->first), {}};
    for (const auto& slot : best->second.slots) e.events.push_back(slot.event);
    first_match_ = std::move(e);
  }
}

template <class Policy>
std::size_t PatternMonitor<Policy>::entry_count() const noexcept {
  std::size_t n = 0;
  for (const auto& bucket : by_length_) n += bucket.size();
  return n;
}

template <class Policy>
std::vector<MonitorEntry> PatternMonitor<Policy>::entries() const {
  std::vector<MonitorEntry> out;
  for (const auto& bucket : by_length_)
    for (const auto& [key, entry] : bucket) {
      MonitorEntry e{decode(key), {}};
      for (const auto& slot : entry.slots) e.events.push_back(slot.event);
      out.push_back(std::move(e));
    }
  std::sort(out.begin(), out.end(), [](const MonitorEntry& a, const MonitorEntry& b) {
    return std::make_pair(a.positions.size(), a.positions) < std::make_pair(b.positions.size(), b.positions);
  });
  return out;
}

template class PatternMonitor<AfterSetSummaries>;
template class PatternMonitor<VectorClockSummaries>;

// ---------------------------------------------------------------------------

struct GeneralizedMonitor::Impl {
  struct Unit {
    std::size_t source;
    std::variant<AfterSetMonitor, VectorClockMonitor> monitor;
  };
  std::vector<Unit> units;
  std::optional<std::size_t> epsilon_source;
};

GeneralizedMonitor::GeneralizedMonitor(const ConcurrentAlphabet& alphabet, const GeneralizedPattern& g,
                                       Engine engine, std::size_t expansion_cap)
    : impl_(std::make_unique<Impl>()) {
  for (auto& e : expand(g, expansion_cap)) {
    if (std::holds_alternative<EpsilonLang>(e.language)) {
      if (!impl_->epsilon_source) impl_->epsilon_source = e.source;
    } else if (const auto* p = std::get_if<Pattern>(&e.language)) {
      if (engine == Engine::afterset)
        impl_->units.push_back({e.source, AfterSetMonitor(alphabet, *p)});
      else
        impl_->units.push_back({e.source, VectorClockMonitor(alphabet, *p)});
    }
  }
  peak_entries_ = entry_count();
  for (const auto& u : impl_->units) {
    std::visit(
        [&](const auto& m) {
          if (!match_ && m.matched()) match_ = Match{u.source, 0, *m.first_match()};
        },
        u.monitor);
  }
}

GeneralizedMonitor::~GeneralizedMonitor() = default;
GeneralizedMonitor::GeneralizedMonitor(GeneralizedMonitor&&) noexcept = default;
GeneralizedMonitor& GeneralizedMonitor::operator=(GeneralizedMonitor&&) noexcept = default;

bool GeneralizedMonitor::step(LabelId f) {
  if (match_) return true;
  for (auto& u : impl_->units) std::visit([&](auto& m) { m.step(f); }, u.monitor);
  ++events_processed_;
  peak_entries_ = std::max(peak_entries_, entry_count());
  for (const auto& u : impl_->units) {
    std::visit(
        [&](const auto& m) {
          if (!match_ && m.matched()) match_ = Match{u.source, events_processed_, *m.first_match()};
        },
        u.monitor);
  }
  return match_.has_value();
}

void GeneralizedMonitor::finish() {
  if (!match_ && events_processed_ == 0 && impl_->epsilon_source)
    match_ = Match{*impl_->epsilon_source, 0, MonitorEntry{}};
}

std::size_t GeneralizedMonitor::entry_count() const {
  std::size_t n = 0;
  for (const auto& u : impl_->units) std::visit([&](const auto& m) { n += m.entry_count(); }, u.monitor);
  return n;
}

std::size_t GeneralizedMonitor::monitor_count() const { return impl_->units.size(); }

MatchReport GeneralizedMonitor::report() const {
  MatchReport r;
  r.matched = match_.has_value();
  r.events_processed = match_ ? match_->prefix : events_processed_;
  r.peak_entries = peak_entries_;
  r.monitors = monitor_count();
  if (match_) {
    Witness w;
    w.disjunct = match_->disjunct;
    w.tuple = match_->entry.events;
    std::vector<std::size_t> slots(w.tuple.size());
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
    std::sort(slots.begin(), slots.end(),
              [&](std::size_t a, std::size_t b) { return match_->entry.positions[a] < match_->entry.positions[b]; });
    for (auto s : slots) w.target.push_back(w.tuple[s]);
    r.witness = std::move(w);
  }
  return r;
}

MatchReport monitor(const Trace& trace, const GeneralizedPattern& g, const MonitorOptions& options) {
  GeneralizedMonitor mon(trace.alphabet(), g, options.engine, options.expansion_cap);
  for (EventId i = 0; i < trace.size() && !mon.matched(); ++i) mon.step(trace.label_id(i));
  mon.finish();
  auto report = mon.report();
  if (report.witness && options.witness)
    report.witness->reordering = witness_reordering(trace.prefix(report.events_processed), report.witness->target);
  return report;
}

}  // namespace ptm

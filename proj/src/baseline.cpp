#include "ptm/baseline.hpp"

#include <algorithm>
#include <string>

#include "ptm/error.hpp"

namespace ptm {

IdealSpace::IdealSpace(const ConcurrentAlphabet& alphabet) : stream_(alphabet), chain_events_(stream_.dimension()) {}

IdealSpace::IdealSpace(const Trace& trace) : IdealSpace(trace.alphabet()) {
  for (auto l : trace.label_ids()) append(l);
}

void IdealSpace::append(LabelId l) {
  const EventId e = labels_.size();
  const auto c = stream_.component_of(l);
  labels_.push_back(l);
  clocks_.push_back(stream_.step(l));
  chain_events_[c].push_back(e);
  position_.push_back(static_cast<std::uint32_t>(chain_events_[c].size()));
}

bool IdealSpace::leq(EventId e, EventId f) const { return position_[e] <= clocks_[f][chain_of(e)]; }

bool IdealSpace::contains(const Frontier& x, EventId e) const { return position_[e] <= x[chain_of(e)]; }

std::size_t IdealSpace::member_count(const Frontier& x) const {
  std::size_t n = 0;
  for (auto v : x) n += v;
  return n;
}

std::vector<EventId> IdealSpace::members(const Frontier& x) const {
  std::vector<EventId> out;
  for (std::size_t c = 0; c < x.size(); ++c)
    out.insert(out.end(), chain_events_[c].begin(), chain_events_[c].begin() + x[c]);
  std::sort(out.begin(), out.end());
  return out;
}

IdealSpace::Frontier IdealSpace::frontier_of(std::span<const EventId> key) const {
  Frontier x(chains(), 0);
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] >= size())
      throw Error(ErrorCode::invalid_ideal, "event " + std::to_string(key[i]) + " is not in the trace");
    if (i > 0 && key[i] <= key[i - 1]) throw Error(ErrorCode::invalid_ideal, "ideal key must be sorted and duplicate free");
    for (std::size_t j = 0; j < i; ++j)
      if (leq(key[j], key[i]))
        throw Error(ErrorCode::invalid_ideal, "events " + std::to_string(key[j]) + " and " + std::to_string(key[i]) +
                                                  " are ordered; an ideal key must be an antichain");
    const auto& vc = clocks_[key[i]];
    for (std::size_t c = 0; c < x.size(); ++c) x[c] = std::max(x[c], vc[c]);
  }
  return x;
}

IdealKey IdealSpace::key_of(const Frontier& x) const {
  IdealKey key;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] == 0) continue;
    const EventId m = last_in_chain(x, c);
    bool maximal = true;
    for (std::size_t d = 0; d < x.size() && maximal; ++d)
      if (d != c && x[d] > 0 && clocks_[last_in_chain(x, d)][c] >= x[c]) maximal = false;
    if (maximal) key.push_back(m);
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<EventId> IdealSpace::minimal_extensions(const Frontier& x) const {
  std::vector<EventId> out;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] >= chain_events_[c].size()) continue;
    const EventId g = chain_events_[c][x[c]];
    const auto& vc = clocks_[g];
    bool ready = true;
    for (std::size_t d = 0; d < x.size() && ready; ++d)
      if (d != c && vc[d] > x[d]) ready = false;
    if (ready) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EventId> minimal_extensions(const Trace& trace, std::span<const EventId> key) {
  IdealSpace space(trace);
  return space.minimal_extensions(space.frontier_of(key));
}

BertoniMonitor::BertoniMonitor(const ConcurrentAlphabet& alphabet, const Nfa& nfa, const BertoniOptions& options)
    : space_(alphabet), nfa_(std::in_place, nfa, alphabet), max_ideals_(options.max_ideals) {
  early_exit_ = options.early_exit.value_or(nfa_->suffix_closed());
  full_states_ = nfa_->initial();
  insert({}, full_states_);
  if (early_exit_ && nfa_->accepts(full_states_)) match_prefix_ = 0;
}

BertoniMonitor::BertoniMonitor(const ConcurrentAlphabet& alphabet, std::size_t max_ideals)
    : space_(alphabet), max_ideals_(max_ideals) {
  insert({}, {});
}

void BertoniMonitor::insert(IdealKey key, StateSet states) {
  memo_.emplace(std::move(key), std::move(states));
  check_budget();
}

void BertoniMonitor::check_budget() const {
  if (memo_.size() > max_ideals_)
    throw Error(ErrorCode::budget_exceeded, "ideal budget of " + std::to_string(max_ideals_) + " exceeded after " +
                                                std::to_string(space_.size()) + " events");
}

bool BertoniMonitor::step(LabelId l) {
  if (early_exit_ && matched()) return true;
  space_.append(l);
  const EventId f = space_.size() - 1;

  // Ideals of equal size never depend on each other, so a layer is complete
  // before the next one is generated. Memo nodes stay put across rehashing.
  struct Pending {
    IdealSpace::Frontier frontier;
    IdealKey key;
    StateSet* states;
  };
  std::vector<Pending> layer, next;
  {
    IdealSpace::Frontier principal(space_.clock(f).counts());
    auto key = space_.key_of(principal);
    auto it = memo_.try_emplace(key).first;
    layer.push_back({std::move(principal), std::move(key), &it->second});
    check_budget();
  }
  StateSet* full = nullptr;
  while (!layer.empty()) {
    for (auto& y : layer) {
      if (nfa_) {
        StateSet s(nfa_->state_count());
        for (auto g : y.key) {
          auto x = y.frontier;
          x[space_.chain_of(g)] -= 1;
          nfa_->step_into(memo_.at(space_.key_of(x)), space_.label(g), s);
        }
        *y.states = std::move(s);
      }
      full = y.states;
    }
    next.clear();
    for (const auto& y : layer)
      for (auto g : space_.minimal_extensions(y.frontier)) {
        auto x = y.frontier;
        x[space_.chain_of(g)] += 1;
        auto key = space_.key_of(x);
        auto [it, fresh] = memo_.try_emplace(key);
        if (!fresh) continue;
        next.push_back({std::move(x), std::move(key), &it->second});
        check_budget();
      }
    std::swap(layer, next);
  }
  // The last ideal built is the largest one: the whole prefix.
  if (nfa_) {
    full_states_ = *full;
    if (early_exit_ && nfa_->accepts(full_states_)) match_prefix_ = space_.size();
  }
  return early_exit_ && matched();
}

bool BertoniMonitor::finish() {
  if (nfa_ && !early_exit_ && !matched() && nfa_->accepts(full_states_)) match_prefix_ = space_.size();
  return matched();
}

std::vector<IdealKey> BertoniMonitor::memo_keys() const {
  std::vector<IdealKey> out;
  out.reserve(memo_.size());
  for (const auto& [k, v] : memo_) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

BaselineReport bertoni(const Trace& trace, const Nfa& nfa, const BertoniOptions& options) {
  BertoniMonitor m(trace.alphabet(), nfa, options);
  if (!m.matched() || !m.early_exit())
    for (auto l : trace.label_ids())
      if (m.step(l)) break;
  m.finish();
  BaselineReport r;
  r.matched = m.matched();
  r.events_processed = m.events_processed();
  r.ideals = m.memo_size();
  r.early_exit = m.early_exit();
  return r;
}

std::size_t ideal_count(const Trace& trace, std::size_t max_ideals) {
  BertoniMonitor m(trace.alphabet(), max_ideals);
  for (auto l : trace.label_ids()) m.step(l);
  return m.memo_size();
}

}  // namespace ptm

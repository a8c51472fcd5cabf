#include "ptm/nfa.hpp"

#include <algorithm>
#include <string>

#include "ptm/error.hpp"

namespace ptm {

bool guard_matches(const Guard& g, const Label& l) {
  if (const auto* exact = std::get_if<Label>(&g)) return *exact == l;
  if (const auto* set = std::get_if<OneOf>(&g))
    return std::find(set->labels.begin(), set->labels.end(), l) != set->labels.end();
  return true;
}

void Nfa::validate() const {
  auto check = [&](std::size_t s, const char* what) {
    if (s >= state_count)
      throw Error(ErrorCode::validation, std::string(what) + " state " + std::to_string(s) +
                                             " out of range (state count " + std::to_string(state_count) + ")");
  };
  for (auto s : initial) check(s, "initial");
  for (auto s : accepting) check(s, "accepting");
  for (const auto& t : transitions) {
    check(t.from, "transition source");
    check(t.to, "transition target");
  }
}

bool Nfa::suffix_closed() const {
  for (auto f : accepting) {
    const bool loops = std::any_of(transitions.begin(), transitions.end(), [&](const Transition& t) {
      return t.from == f && t.to == f && std::holds_alternative<AnyLabel>(t.guard);
    });
    if (!loops) return false;
  }
  return true;
}

Nfa pattern_to_nfa(const Pattern& p) {
  const auto d = p.dimension();
  Nfa nfa;
  nfa.state_count = d + 1;
  nfa.initial = {0};
  nfa.accepting = {d};
  for (std::size_t i = 0; i < d; ++i) {
    nfa.transitions.push_back({i, AnyLabel{}, i});
    const auto& spec = p.positions[i];
    Guard g = spec.size() == 1 ? Guard{spec.front()} : Guard{OneOf{spec}};
    nfa.transitions.push_back({i, std::move(g), i + 1});
  }
  nfa.transitions.push_back({d, AnyLabel{}, d});
  return nfa;
}

Nfa generalized_to_nfa(const GeneralizedPattern& g, std::size_t cap) {
  Nfa out;
  for (const auto& e : expand(g, cap)) {
    const auto base = out.state_count;
    if (std::holds_alternative<EmptyLang>(e.language)) continue;
    if (std::holds_alternative<EpsilonLang>(e.language)) {
      out.state_count += 1;
      out.initial.push_back(base);
      out.accepting.push_back(base);
      continue;
    }
    const auto part = pattern_to_nfa(std::get<Pattern>(e.language));
    out.state_count += part.state_count;
    for (auto s : part.initial) out.initial.push_back(base + s);
    for (auto s : part.accepting) out.accepting.push_back(base + s);
    for (const auto& t : part.transitions) out.transitions.push_back({base + t.from, t.guard, base + t.to});
  }
  return out;
}

bool word_membership(const Nfa& nfa, const Word& w) {
  nfa.validate();
  std::vector<char> current(nfa.state_count, 0), next(nfa.state_count, 0);
  for (auto s : nfa.initial) current[s] = 1;
  for (const auto& letter : w) {
    std::fill(next.begin(), next.end(), 0);
    for (const auto& t : nfa.transitions)
      if (current[t.from] && guard_matches(t.guard, letter)) next[t.to] = 1;
    current.swap(next);
  }
  return std::any_of(nfa.accepting.begin(), nfa.accepting.end(), [&](std::size_t s) { return current[s]; });
}

CompiledNfa::CompiledNfa(const Nfa& nfa, const ConcurrentAlphabet& alphabet)
    : state_count_(nfa.state_count),
      label_count_(alphabet.size()),
      initial_(nfa.state_count),
      accepting_(nfa.state_count),
      suffix_closed_(nfa.suffix_closed()),
      successors_(alphabet.size() * nfa.state_count, StateSet(nfa.state_count)) {
  nfa.validate();
  for (auto s : nfa.initial) initial_.set(s);
  for (auto s : nfa.accepting) accepting_.set(s);
  for (const auto& t : nfa.transitions) {
    auto add = [&](LabelId l) { successors_[l * state_count_ + t.from].set(t.to); };
    if (const auto* exact = std::get_if<Label>(&t.guard)) {
      if (auto id = alphabet.find(*exact)) add(*id);
    } else if (const auto* set = std::get_if<OneOf>(&t.guard)) {
      for (const auto& l : set->labels)
        if (auto id = alphabet.find(l)) add(*id);
    } else {
      for (LabelId l = 0; l < label_count_; ++l) add(l);
    }
  }
}

void CompiledNfa::step_into(const StateSet& states, LabelId label, StateSet& out) const {
  const auto* row = &successors_[static_cast<std::size_t>(label) * state_count_];
  states.for_each([&](std::size_t q) { out |= row[q]; });
}

StateSet CompiledNfa::step(const StateSet& states, LabelId label) const {
  StateSet out(state_count_);
  step_into(states, label, out);
  return out;
}

}  // namespace ptm

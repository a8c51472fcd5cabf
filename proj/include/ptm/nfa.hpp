#ifndef PTM_NFA_HPP
#define PTM_NFA_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "ptm/alphabet.hpp"
#include "ptm/bitset.hpp"
#include "ptm/label.hpp"
#include "ptm/pattern.hpp"

namespace ptm {

struct AnyLabel {
  friend bool operator==(const AnyLabel&, const AnyLabel&) = default;
};
struct OneOf {
  std::vector<Label> labels;
  friend bool operator==(const OneOf&, const OneOf&) = default;
};

/// Transition guard: an exact label, a label set, or any label.
using Guard = std::variant<Label, OneOf, AnyLabel>;

bool guard_matches(const Guard& g, const Label& l);

struct Transition {
  std::size_t from;
  Guard guard;
  std::size_t to;
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Nondeterministic automaton over labels, without epsilon moves.
struct Nfa {
  std::size_t state_count = 0;
  std::vector<std::size_t> initial;
  std::vector<std::size_t> accepting;
  std::vector<Transition> transitions;

  /// Throws ErrorCode::validation on out-of-range state ids.
  void validate() const;
  /// Every accepting state carries an any-label self loop, so the language is
  /// closed under appending letters.
  bool suffix_closed() const;

  friend bool operator==(const Nfa&, const Nfa&) = default;
};

/// Sigma* a_1 Sigma* ... a_d Sigma* as a (d+1)-state chain.
Nfa pattern_to_nfa(const Pattern& p);

/// Disjoint union of automata for every disjunct (expanded first).
Nfa generalized_to_nfa(const GeneralizedPattern& g, std::size_t cap = default_expansion_cap);

/// Subset simulation over plain labels.
bool word_membership(const Nfa& nfa, const Word& w);

/// Nfa with guards resolved against an alphabet: one successor bitset per
/// (label id, state). Labels the alphabet does not know are never matched.
class CompiledNfa {
 public:
  CompiledNfa(const Nfa& nfa, const ConcurrentAlphabet& alphabet);

  std::size_t state_count() const noexcept { return state_count_; }
  const StateSet& initial() const noexcept { return initial_; }
  bool accepts(const StateSet& states) const { return states.intersects(accepting_); }
  bool suffix_closed() const noexcept { return suffix_closed_; }

  /// States reachable from `states` on one letter `label`.
  StateSet step(const StateSet& states, LabelId label) const;
  /// OR the successors into `out`.
  void step_into(const StateSet& states, LabelId label, StateSet& out) const;

 private:
  std::size_t state_count_;
  std::size_t label_count_;
  StateSet initial_;
  StateSet accepting_;
  bool suffix_closed_;
  std::vector<StateSet> successors_;  // [label * state_count + state]
};

}  // namespace ptm

#endif  // PTM_NFA_HPP

#ifndef PTM_BASELINE_HPP
#define PTM_BASELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ptm/alphabet.hpp"
#include "ptm/nfa.hpp"
#include "ptm/order.hpp"
#include "ptm/trace.hpp"

namespace ptm {

/// Canonical name of an ideal: its maximal events, sorted.
using IdealKey = std::vector<EventId>;

struct IdealKeyHash {
  std::size_t operator()(const IdealKey& k) const noexcept {
    std::size_t h = k.size();
    for (auto e : k) h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Growing event store for reasoning about downsets of a trace prefix.
///
/// Events are grouped into chains (threads, or labels when same-thread labels
/// may commute); every chain is totally ordered by the trace order. A downset
/// is then equivalently described by its frontier, the number of events it
/// holds from each chain, which the vector timestamps make cheap to test.
class IdealSpace {
 public:
  using Frontier = std::vector<std::uint32_t>;

  explicit IdealSpace(const ConcurrentAlphabet& alphabet);
  explicit IdealSpace(const Trace& trace);

  /// Appends the next event.
  void append(LabelId l);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t chains() const noexcept { return stream_.dimension(); }
  LabelId label(EventId e) const { return labels_[e]; }
  const VectorClock& clock(EventId e) const { return clocks_[e]; }

  bool leq(EventId e, EventId f) const;
  bool contains(const Frontier& x, EventId e) const;
  std::size_t member_count(const Frontier& x) const;
  std::vector<EventId> members(const Frontier& x) const;

  /// Throws ErrorCode::invalid_ideal unless `key` is a sorted antichain of
  /// known events.
  Frontier frontier_of(std::span<const EventId> key) const;
  IdealKey key_of(const Frontier& x) const;
  /// Events outside `x` whose predecessors all lie in `x`.
  std::vector<EventId> minimal_extensions(const Frontier& x) const;
  /// Latest event of chain `c` inside `x` (x[c] must be positive).
  EventId last_in_chain(const Frontier& x, std::size_t c) const { return chain_events_[c][x[c] - 1]; }
  std::size_t chain_of(EventId e) const { return stream_.component_of(labels_[e]); }

 private:
  VcStream stream_;
  std::vector<LabelId> labels_;
  std::vector<VectorClock> clocks_;
  std::vector<std::uint32_t> position_;  // 1-based index within its chain
  std::vector<std::vector<EventId>> chain_events_;
};

/// All events outside the ideal named by `key` that can be added to it.
std::vector<EventId> minimal_extensions(const Trace& trace, std::span<const EventId> key);

inline constexpr std::size_t default_max_ideals = 10'000'000;

struct BertoniOptions {
  /// Unset: enabled iff the automaton is suffix closed.
  std::optional<bool> early_exit;
  std::size_t max_ideals = default_max_ideals;
};

struct BaselineReport {
  bool matched = false;
  std::size_t events_processed = 0;
  std::size_t ideals = 0;  // memo size at termination
  bool early_exit = false;
};

/// Streaming ideal enumeration. When an event f arrives, every new ideal
/// (each contains f) is generated from the principal ideal of f in order of
/// size, and its reachable state set is the union, over its maximal events g,
/// of the successors on lbl(g) of the state set of the ideal without g.
///
/// With early exit the verdict is MATCH at the first prefix some ideal of
/// which reaches an accepting state (sound for suffix-closed languages);
/// otherwise the full ideal decides at the end.
class BertoniMonitor {
 public:
  BertoniMonitor(const ConcurrentAlphabet& alphabet, const Nfa& nfa, const BertoniOptions& options = {});
  /// Counting-only mode (no automaton).
  BertoniMonitor(const ConcurrentAlphabet& alphabet, std::size_t max_ideals);

  /// Consumes one event; returns true once matched under early exit.
  /// Throws ErrorCode::budget_exceeded when the memo outgrows max_ideals.
  bool step(LabelId l);
  /// Final verdict.
  bool finish();

  bool matched() const noexcept { return match_prefix_.has_value(); }
  std::optional<std::size_t> match_prefix() const noexcept { return match_prefix_; }
  std::size_t events_processed() const noexcept { return space_.size(); }
  std::size_t memo_size() const noexcept { return memo_.size(); }
  bool early_exit() const noexcept { return early_exit_; }

  std::vector<IdealKey> memo_keys() const;
  const IdealSpace& space() const noexcept { return space_; }

 private:
  void insert(IdealKey key, StateSet states);
  void check_budget() const;

  IdealSpace space_;
  std::optional<CompiledNfa> nfa_;
  bool early_exit_ = false;
  std::size_t max_ideals_;
  std::unordered_map<IdealKey, StateSet, IdealKeyHash> memo_;
  StateSet full_states_;
  std::optional<std::size_t> match_prefix_;
};

BaselineReport bertoni(const Trace& trace, const Nfa& nfa, const BertoniOptions& options = {});

/// Exact number of downsets of the trace order (including the empty one).
std::size_t ideal_count(const Trace& trace, std::size_t max_ideals = default_max_ideals);

}  // namespace ptm

#endif  // PTM_BASELINE_HPP

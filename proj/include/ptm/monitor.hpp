#ifndef PTM_MONITOR_HPP
#define PTM_MONITOR_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptm/alphabet.hpp"
#include "ptm/error.hpp"
#include "ptm/order.hpp"
#include "ptm/pattern.hpp"
#include "ptm/trace.hpp"

namespace ptm {

// ---------------------------------------------------------------------------
// Candidate tuples and their target order

/// Events of a candidate tuple, in trace order.
struct CandidateTuple {
  std::vector<EventId> events;
  friend bool operator==(const CandidateTuple&, const CandidateTuple&) = default;
};

/// The stable reordering of a tuple into target-label order.
struct TargetPermutation {
  std::vector<std::size_t> order;  // order[k]: slot placed at target position k
  std::vector<std::size_t> rank;   // rank[slot]: target position of slot
};

/// Stable sort of `slot_labels` into the order given by `target`: the k-th
/// occurrence of a label in the target takes the k-th slot carrying it.
/// Throws ErrorCode::multiset_mismatch when the label multisets differ.
template <class L>
TargetPermutation sort_to_target(std::span<const L> slot_labels, std::span<const L> target) {
  if (slot_labels.size() != target.size())
    throw Error(ErrorCode::multiset_mismatch, "tuple and target have different lengths");
  const auto m = slot_labels.size();
  TargetPermutation out{std::vector<std::size_t>(m), std::vector<std::size_t>(m)};
  std::vector<char> used(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t s = 0;
    while (s < m && (used[s] || !(slot_labels[s] == target[k]))) ++s;
    if (s == m) throw Error(ErrorCode::multiset_mismatch, "tuple labels are not a permutation of the target");
    used[s] = 1;
    out.order[k] = s;
    out.rank[s] = k;
  }
  return out;
}

/// Constant-space admissibility check of a (partial) candidate tuple against a
/// target label sequence: one pass maintaining the after sets of the tuple's
/// events, rejecting as soon as a pair the target flips is causally ordered.
bool check_admissible(const Trace& trace, const CandidateTuple& tuple, const Word& target);

/// Slotwise later event. Throws ErrorCode::label_mismatch.
CandidateTuple tuple_join(const Trace& trace, const CandidateTuple& a, const CandidateTuple& b);
/// Slotwise at-or-before. Throws ErrorCode::label_mismatch.
bool tuple_leq(const Trace& trace, const CandidateTuple& a, const CandidateTuple& b);

/// A linearization of `trace` that contains `chain` (event ids in the desired
/// order) as a subsequence; smallest available id first. Throws
/// ErrorCode::internal if the chain contradicts the trace order.
std::vector<EventId> witness_reordering(const Trace& trace, std::span<const EventId> chain);
/// Same, with the chain obtained by sorting `tuple` into `target` order.
std::vector<EventId> witness_reordering(const Trace& trace, const CandidateTuple& tuple, const Word& target);

// ---------------------------------------------------------------------------
// Summary policies

/// After-set summaries: refreshed on every event.
class AfterSetSummaries {
 public:
  using Summary = AfterSet;
  static constexpr bool refreshes = true;

  explicit AfterSetSummaries(const ConcurrentAlphabet& alphabet) : alphabet_(&alphabet) {}

  void advance(LabelId) {}
  void refresh(Summary& s, LabelId f) const { after_set_step(s, f, *alphabet_); }
  Summary capture(LabelId f) const { return after_set_new(f, *alphabet_); }
  /// e <= f for the event f just advanced over.
  bool ordered_before(const Summary& e, LabelId f) const { return afterset_causality(e, f); }

 private:
  const ConcurrentAlphabet* alphabet_;
};

/// Vector-timestamp summaries: captured once, never updated.
class VectorClockSummaries {
 public:
  using Summary = VectorClock;
  static constexpr bool refreshes = false;

  explicit VectorClockSummaries(const ConcurrentAlphabet& alphabet) : stream_(alphabet) {}

  void advance(LabelId f) { current_ = &stream_.step(f); }
  void refresh(Summary&, LabelId) const {}
  Summary capture(LabelId) const { return *current_; }
  bool ordered_before(const Summary& e, LabelId) const { return e.leq(*current_); }

 private:
  VcStream stream_;
  const VectorClock* current_ = nullptr;
};

// ---------------------------------------------------------------------------
// Streaming monitor for one concrete pattern

/// Largest supported pattern dimension (keys pack positions into 64 bits).
inline constexpr std::size_t max_pattern_dimension = 15;

/// Number of keys a dimension-d pattern can ever track: sum over m of d!/(d-m)!.
std::size_t key_bound(std::size_t d);

/// One tracked key and its maximum partially admissible tuple.
struct MonitorEntry {
  std::vector<std::size_t> positions;  // pattern position of each slot, slots in trace order
  std::vector<EventId> events;         // the tuple, in trace order
};

/// Keys are sequences of distinct pattern positions (equal labels in
/// increasing position order); the empty key is always present. Every event
/// refreshes the stored summaries, then tries to extend each stored tuple
/// with the new event, longest keys first so every extension reads the
/// maxima of the previous prefix. A key of full length means a match.
template <class Policy>
class PatternMonitor {
 public:
  PatternMonitor(const ConcurrentAlphabet& alphabet, const Pattern& pattern);

  /// Processes the next event (stream_step). Keeps tracking after a match.
  void step(LabelId f);

  bool matched() const noexcept { return match_prefix_.has_value(); }
  /// Prefix length at which the first complete tuple appeared.
  std::optional<std::size_t> match_prefix() const noexcept { return match_prefix_; }
  std::size_t events_processed() const noexcept { return events_processed_; }
  std::size_t dimension() const noexcept { return pattern_.size(); }

  std::size_t entry_count() const noexcept;
  std::size_t peak_entry_count() const noexcept { return peak_entries_; }
  std::vector<MonitorEntry> entries() const;

  /// First complete tuple found, with events in trace order and their target
  /// order (pattern order).
  const std::optional<MonitorEntry>& first_match() const noexcept { return first_match_; }

 private:
  using Summary = typename Policy::Summary;
  struct Slot {
    EventId event;
    Summary summary;
  };
  struct Entry {
    std::vector<Slot> slots;
  };
  using Key = std::uint64_t;

  static Key extend_key(Key k, std::size_t length, std::size_t position) {
    return k | (Key{position + 1} << (4 * length));
  }
  static std::vector<std::size_t> decode(Key k);

  Policy policy_;
  std::vector<std::optional<LabelId>> pattern_;
  std::vector<std::unordered_map<Key, Entry>> by_length_;
  std::size_t events_processed_ = 0;
  std::size_t peak_entries_ = 1;
  std::optional<std::size_t> match_prefix_;
  std::optional<MonitorEntry> first_match_;
};

using AfterSetMonitor = PatternMonitor<AfterSetSummaries>;
using VectorClockMonitor = PatternMonitor<VectorClockSummaries>;

// ---------------------------------------------------------------------------
// Generalized patterns

enum class Engine { afterset, vc };

struct Witness {
  std::size_t disjunct;
  std::vector<EventId> tuple;       // trace order
  std::vector<EventId> target;      // tuple in pattern order
  std::vector<EventId> reordering;  // equivalent execution of the consumed prefix
};

struct MatchReport {
  bool matched = false;
  std::size_t events_processed = 0;
  std::optional<Witness> witness;
  std::size_t peak_entries = 0;
  std::size_t monitors = 0;
};

struct MonitorOptions {
  Engine engine = Engine::vc;
  bool witness = true;
  std::size_t expansion_cap = default_expansion_cap;
};

/// Runs one pattern monitor per expanded disjunct in lockstep over a stream
/// of events. The match prefix is the minimum over disjuncts.
class GeneralizedMonitor {
 public:
  GeneralizedMonitor(const ConcurrentAlphabet& alphabet, const GeneralizedPattern& g,
                     Engine engine = Engine::vc, std::size_t expansion_cap = default_expansion_cap);
  ~GeneralizedMonitor();
  GeneralizedMonitor(GeneralizedMonitor&&) noexcept;
  GeneralizedMonitor& operator=(GeneralizedMonitor&&) noexcept;

  /// Consumes one event; returns true once some disjunct has matched.
  bool step(LabelId f);
  /// Signals end of input (settles epsilon disjuncts).
  void finish();

  bool matched() const noexcept { return match_.has_value(); }
  std::size_t events_processed() const noexcept { return events_processed_; }
  std::size_t entry_count() const;
  std::size_t peak_entries() const noexcept { return peak_entries_; }
  std::size_t monitor_count() const;

  /// Report without the reordering (which needs the trace).
  MatchReport report() const;

 private:
  struct Impl;
  struct Match {
    std::size_t disjunct;
    std::size_t prefix;
    MonitorEntry entry;
  };
  std::unique_ptr<Impl> impl_;
  std::size_t events_processed_ = 0;
  std::size_t peak_entries_ = 0;
  std::optional<Match> match_;
};

/// Predictive monitoring of `trace` against `g`, stopping at the first match.
MatchReport monitor(const Trace& trace, const GeneralizedPattern& g, const MonitorOptions& options = {});

}  // namespace ptm

#endif  // PTM_MONITOR_HPP

#ifndef PTM_ORDER_HPP
#define PTM_ORDER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ptm/alphabet.hpp"
#include "ptm/bitset.hpp"
#include "ptm/trace.hpp"

namespace ptm {

// ---------------------------------------------------------------------------
// The induced partial order

/// Last event seen so far for every label; drives the immediate edges of the
/// trace order (each event points at the latest occurrence of every label it
/// depends on).
class PredecessorIndex {
 public:
  explicit PredecessorIndex(const ConcurrentAlphabet& alphabet)
      : alphabet_(&alphabet), last_(alphabet.size()) {}

  /// Immediate predecessors of `e`, then records `e` as the latest of its label.
  std::vector<EventId> observe(const Event& e);

  std::optional<EventId> last(LabelId l) const { return last_[l]; }

 private:
  const ConcurrentAlphabet* alphabet_;
  std::vector<std::optional<EventId>> last_;
};

/// Immediate-predecessor lists for every event. Their transitive closure is
/// the trace partial order.
std::vector<std::vector<EventId>> immediate_predecessors(const Trace& trace);

/// e <= f in the trace order (reflexive). Definitional forward closure; meant
/// as the reference implementation.
bool happens_before(const Trace& trace, EventId e, EventId f);

// ---------------------------------------------------------------------------
// After sets

using AfterSet = LabelSet;

AfterSet after_set_new(LabelId f, const ConcurrentAlphabet& alphabet);

/// Extends `a` with lbl(f) iff some label already in `a` depends on lbl(f).
inline void after_set_step(AfterSet& a, LabelId f, const ConcurrentAlphabet& alphabet) {
  if (a.intersects(alphabet.dependent_set(f))) a.set(f);
}

inline void after_set_step(std::span<AfterSet> sets, LabelId f, const ConcurrentAlphabet& alphabet) {
  for (auto& a : sets) after_set_step(a, f, alphabet);
}

/// For the after set of e in a prefix ending at f: e <= f iff lbl(f) is in it.
inline bool afterset_causality(const AfterSet& a, LabelId f) { return a.test(f); }

// ---------------------------------------------------------------------------
// Vector timestamps

/// Per-component event counts. Components are threads when every pair of
/// same-thread labels is dependent, and labels otherwise.
class VectorClock {
 public:
  VectorClock() = default;
  explicit VectorClock(std::size_t dimension) : counts_(dimension, 0) {}
  VectorClock(std::initializer_list<std::uint32_t> counts) : counts_(counts) {}

  std::size_t dimension() const noexcept { return counts_.size(); }
  std::uint32_t operator[](std::size_t c) const { return counts_[c]; }
  std::uint32_t& operator[](std::size_t c) { return counts_[c]; }

  VectorClock& join(const VectorClock& other) {
    for (std::size_t c = 0; c < counts_.size(); ++c)
      if (other.counts_[c] > counts_[c]) counts_[c] = other.counts_[c];
    return *this;
  }

  /// Componentwise <=, assuming equal dimensions.
  bool leq(const VectorClock& other) const noexcept {
    for (std::size_t c = 0; c < counts_.size(); ++c)
      if (counts_[c] > other.counts_[c]) return false;
    return true;
  }

  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

  friend bool operator==(const VectorClock&, const VectorClock&) = default;

 private:
  std::vector<std::uint32_t> counts_;
};

/// Componentwise <=; throws ErrorCode::clock_mismatch on differing dimensions.
bool vc_leq(const VectorClock& u, const VectorClock& v);

/// Streaming vector timestamps: per-component clocks and per-label clocks.
/// Each step bumps the acting component, joins the clocks of every label
/// dependent with the new event's label and publishes the result.
class VcStream {
 public:
  explicit VcStream(const ConcurrentAlphabet& alphabet);

  /// Timestamp of the next event, which carries label `l`.
  const VectorClock& step(LabelId l);

  std::size_t dimension() const noexcept { return component_clocks_.size(); }
  std::size_t component_of(LabelId l) const { return component_[l]; }
  bool per_thread() const noexcept { return per_thread_; }

 private:
  const ConcurrentAlphabet* alphabet_;
  bool per_thread_;
  std::vector<std::uint32_t> component_;
  std::vector<VectorClock> component_clocks_;
  std::vector<VectorClock> label_clocks_;
};

std::vector<VectorClock> vc_stream(const Trace& trace);

}  // namespace ptm

#endif  // PTM_ORDER_HPP

#ifndef PTM_TRACE_HPP
#define PTM_TRACE_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "ptm/alphabet.hpp"
#include "ptm/label.hpp"

namespace ptm {

using EventId = std::size_t;

struct Event {
  EventId id;
  LabelId label;
};

/// A finite execution: event i carries labels()[i]. The alphabet is shared and
/// frozen once the trace is built.
class Trace {
 public:
  Trace() : alphabet_(std::make_shared<const ConcurrentAlphabet>()) {}
  Trace(std::shared_ptr<const ConcurrentAlphabet> alphabet, std::vector<LabelId> labels);

  /// Interns every label of `word` into `alphabet` and builds the trace.
  static Trace from_word(ConcurrentAlphabet alphabet, const Word& word);

  const ConcurrentAlphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const ConcurrentAlphabet>& alphabet_ptr() const noexcept { return alphabet_; }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  Event event(EventId id) const { return {id, labels_.at(id)}; }
  LabelId label_id(EventId id) const { return labels_[id]; }
  const Label& label(EventId id) const { return alphabet_->label(labels_[id]); }
  const std::vector<LabelId>& label_ids() const noexcept { return labels_; }

  Word word() const;
  /// The first `n` events over the same alphabet.
  Trace prefix(std::size_t n) const;
  /// Events reordered by `order` (a permutation of ids); ids are renumbered.
  Trace permuted(const std::vector<EventId>& order) const;

 private:
  std::shared_ptr<const ConcurrentAlphabet> alphabet_;
  std::vector<LabelId> labels_;
};

}  // namespace ptm

#endif  // PTM_TRACE_HPP

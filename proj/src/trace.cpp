#include "ptm/trace.hpp"

#include <string>

#include "ptm/error.hpp"

namespace ptm {

Trace::Trace(std::shared_ptr<const ConcurrentAlphabet> alphabet, std::vector<LabelId> labels)
    : alphabet_(std::move(alphabet)), labels_(std::move(labels)) {
  for (auto id : labels_)
    if (id >= alphabet_->size())
      throw Error(ErrorCode::unknown_label, "trace label id " + std::to_string(id) + " not in alphabet");
}

Trace Trace::from_word(ConcurrentAlphabet alphabet, const Word& word) {
  std::vector<LabelId> ids;
  ids.reserve(word.size());
  for (const auto& l : word) ids.push_back(alphabet.intern(l));
  return Trace(std::make_shared<const ConcurrentAlphabet>(std::move(alphabet)), std::move(ids));
}

Word Trace::word() const {
  Word w;
  w.reserve(labels_.size());
  for (auto id : labels_) w.push_back(alphabet_->label(id));
  return w;
}

Trace Trace::prefix(std::size_t n) const {
  if (n > labels_.size()) n = labels_.size();
  return Trace(alphabet_, std::vector<LabelId>(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Trace Trace::permuted(const std::vector<EventId>& order) const {
  if (order.size() != labels_.size())
    throw Error(ErrorCode::out_of_range, "permutation size does not match trace length");
  std::vector<LabelId> out;
  out.reserve(order.size());
  for (auto id : order) out.push_back(labels_.at(id));
  return Trace(alphabet_, std::move(out));
}

}  // namespace ptm

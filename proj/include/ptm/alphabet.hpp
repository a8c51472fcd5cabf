#ifndef PTM_ALPHABET_HPP
#define PTM_ALPHABET_HPP

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ptm/bitset.hpp"
#include "ptm/label.hpp"

namespace ptm {

enum class AlphabetMode { thread_partition, explicit_independent, explicit_dependent };

using OpPair = std::pair<std::string, std::string>;
using LabelPair = std::pair<Label, Label>;

/// A label table together with an independence relation over it.
///
/// In thread-partition mode two labels are dependent iff they share a thread
/// or their ops form a declared conflict; unknown labels are registered on
/// first use. In the explicit modes the label set is exactly the labels named
/// by the pairs, and interning anything else fails.
///
/// Labels get dense ids in registration order, threads likewise. The
/// dependence matrix is kept as one bitset row per label.
class ConcurrentAlphabet {
 public:
  ConcurrentAlphabet() = default;

  static ConcurrentAlphabet thread_partition(const std::vector<OpPair>& conflicts = {});
  static ConcurrentAlphabet explicit_independent(const std::vector<LabelPair>& pairs);
  static ConcurrentAlphabet explicit_dependent(const std::vector<LabelPair>& pairs);

  AlphabetMode mode() const noexcept { return mode_; }

  /// Returns the id of `l`, registering it in thread-partition mode.
  LabelId intern(const Label& l);
  std::optional<LabelId> find(const Label& l) const;
  /// Throws ErrorCode::unknown_label.
  LabelId id_of(const Label& l) const;

  const Label& label(LabelId id) const { return labels_.at(id); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  bool dependent(LabelId a, LabelId b) const { return dep_rows_[a].test(b); }
  bool dependent(const Label& a, const Label& b) const { return dependent(id_of(a), id_of(b)); }
  bool independent(LabelId a, LabelId b) const { return !dependent(a, b); }

  const LabelSet& dependent_set(LabelId a) const { return dep_rows_[a]; }
  const std::vector<LabelId>& dependent_list(LabelId a) const { return dep_lists_[a]; }

  ThreadId thread_of(LabelId a) const { return label_thread_[a]; }
  std::size_t thread_count() const noexcept { return threads_.size(); }
  const std::string& thread_name(ThreadId t) const { return threads_.at(t); }
  std::optional<ThreadId> find_thread(const std::string& name) const;

  /// True when every pair of labels on the same thread is dependent.
  bool program_order_dependent() const;

  /// Size of the largest clique of the independence graph.
  std::size_t width() const;

  const std::vector<OpPair>& conflicts() const noexcept { return conflicts_; }
  const std::vector<LabelPair>& pairs() const noexcept { return pairs_; }

  /// Symmetric and irreflexive independence; throws ErrorCode::validation.
  void validate() const;

 private:
  LabelId add_label(const Label& l);
  bool computed_dependence(LabelId a, LabelId b) const;
  void set_dependence(LabelId a, LabelId b, bool dep);

  AlphabetMode mode_ = AlphabetMode::thread_partition;
  std::vector<Label> labels_;
  std::unordered_map<Label, LabelId> index_;
  std::vector<std::string> threads_;
  std::unordered_map<std::string, ThreadId> thread_index_;
  std::vector<ThreadId> label_thread_;
  std::vector<LabelSet> dep_rows_;
  std::vector<std::vector<LabelId>> dep_lists_;

  std::vector<OpPair> conflicts_;
  std::set<OpPair> conflict_set_;
  std::vector<LabelPair> pairs_;
  std::set<std::pair<LabelId, LabelId>> pair_ids_;
};

/// Free-function forms of the alphabet queries.
inline bool dependent(const ConcurrentAlphabet& alphabet, const Label& a, const Label& b) {
  return alphabet.dependent(a, b);
}
inline std::size_t width(const ConcurrentAlphabet& alphabet) { return alphabet.width(); }

/// Exact maximum clique (Bron-Kerbosch with pivoting) of an undirected graph
/// given as adjacency bitsets.
std::size_t max_clique_size(const std::vector<Bitset>& adjacency);

}  // namespace ptm

#endif  // PTM_ALPHABET_HPP

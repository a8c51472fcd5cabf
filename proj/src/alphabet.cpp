#include "ptm/alphabet.hpp"

#include <algorithm>
#include <sstream>

#include "ptm/error.hpp"

namespace ptm {

namespace {

OpPair normalized(OpPair p) {
  if (p.second < p.first) std::swap(p.first, p.second);
  return p;
}

std::string describe(const Label& l) {
  std::ostringstream os;
  os << l;
  return os.str();
}

}  // namespace

ConcurrentAlphabet ConcurrentAlphabet::thread_partition(const std::vector<OpPair>& conflicts) {
  ConcurrentAlphabet a;
  a.mode_ = AlphabetMode::thread_partition;
  for (const auto& c : conflicts) {
    if (a.conflict_set_.insert(normalized(c)).second) a.conflicts_.push_back(c);
  }
  return a;
}

ConcurrentAlphabet ConcurrentAlphabet::explicit_independent(const std::vector<LabelPair>& pairs) {
  ConcurrentAlphabet a;
  a.mode_ = AlphabetMode::explicit_independent;
  for (const auto& [x, y] : pairs) {
    if (x == y)
      throw Error(ErrorCode::validation,
                  "independence must be irreflexive: " + describe(x) + " paired with itself");
  }
  a.pairs_ = pairs;
  for (const auto& [x, y] : pairs) {
    a.add_label(x);
    a.add_label(y);
  }
  for (const auto& [x, y] : pairs) {
    auto i = a.index_.at(x), j = a.index_.at(y);
    a.pair_ids_.insert({std::min(i, j), std::max(i, j)});
  }
  for (LabelId i = 0; i < a.size(); ++i)
    for (LabelId j = 0; j < a.size(); ++j) a.set_dependence(i, j, a.computed_dependence(i, j));
  return a;
}

ConcurrentAlphabet ConcurrentAlphabet::explicit_dependent(const std::vector<LabelPair>& pairs) {
  ConcurrentAlphabet a;
  a.mode_ = AlphabetMode::explicit_dependent;
  a.pairs_ = pairs;
  for (const auto& [x, y] : pairs) {
    a.add_label(x);
    a.add_label(y);
  }
  for (const auto& [x, y] : pairs) {
    auto i = a.index_.at(x), j = a.index_.at(y);
    a.pair_ids_.insert({std::min(i, j), std::max(i, j)});
  }
  for (LabelId i = 0; i < a.size(); ++i)
    for (LabelId j = 0; j < a.size(); ++j) a.set_dependence(i, j, a.computed_dependence(i, j));
  return a;
}

bool ConcurrentAlphabet::computed_dependence(LabelId a, LabelId b) const {
  if (a == b) return true;
  switch (mode_) {
    case AlphabetMode::thread_partition:
      return label_thread_[a] == label_thread_[b] ||
             conflict_set_.count(normalized({labels_[a].op, labels_[b].op})) > 0;
    case AlphabetMode::explicit_independent:
      return pair_ids_.count({std::min(a, b), std::max(a, b)}) == 0;
    case AlphabetMode::explicit_dependent:
      return pair_ids_.count({std::min(a, b), std::max(a, b)}) > 0;
  }
  return true;
}

void ConcurrentAlphabet::set_dependence(LabelId a, LabelId b, bool dep) {
  if (dep && !dep_rows_[a].test(b)) {
    dep_rows_[a].set(b);
    dep_lists_[a].push_back(b);
  }
}

LabelId ConcurrentAlphabet::add_label(const Label& l) {
  if (auto it = index_.find(l); it != index_.end()) return it->second;
  const auto id = static_cast<LabelId>(labels_.size());
  labels_.push_back(l);
  index_.emplace(l, id);
  auto [tit, fresh] = thread_index_.emplace(l.thread, static_cast<ThreadId>(threads_.size()));
  if (fresh) threads_.push_back(l.thread);
  label_thread_.push_back(tit->second);
  dep_rows_.emplace_back(labels_.size());
  dep_lists_.emplace_back();
  for (auto& row : dep_rows_) row.resize(labels_.size());
  return id;
}

LabelId ConcurrentAlphabet::intern(const Label& l) {
  if (auto it = index_.find(l); it != index_.end()) return it->second;
  if (mode_ != AlphabetMode::thread_partition)
    throw Error(ErrorCode::unknown_label, "label " + describe(l) + " is not in the alphabet");
  const auto id = add_label(l);
  for (LabelId j = 0; j <= id; ++j) {
    if (computed_dependence(id, j)) {
      set_dependence(id, j, true);
      set_dependence(j, id, true);
    }
  }
  return id;
}

std::optional<LabelId> ConcurrentAlphabet::find(const Label& l) const {
  if (auto it = index_.find(l); it != index_.end()) return it->second;
  return std::nullopt;
}

LabelId ConcurrentAlphabet::id_of(const Label& l) const {
  if (auto id = find(l)) return *id;
  throw Error(ErrorCode::unknown_label, "label " + describe(l) + " is not in the alphabet");
}

std::optional<ThreadId> ConcurrentAlphabet::find_thread(const std::string& name) const {
  if (auto it = thread_index_.find(name); it != thread_index_.end()) return it->second;
  return std::nullopt;
}

bool ConcurrentAlphabet::program_order_dependent() const {
  for (LabelId a = 0; a < size(); ++a)
    for (LabelId b = a + 1; b < size(); ++b)
      if (label_thread_[a] == label_thread_[b] && !dependent(a, b)) return false;
  return true;
}

void ConcurrentAlphabet::validate() const {
  for (LabelId a = 0; a < size(); ++a) {
    if (!dependent(a, a))
      throw Error(ErrorCode::validation, "label " + describe(labels_[a]) + " independent of itself");
    for (LabelId b = 0; b < size(); ++b)
      if (dependent(a, b) != dependent(b, a))
        throw Error(ErrorCode::validation, "independence is not symmetric for " +
                                               describe(labels_[a]) + " and " + describe(labels_[b]));
  }
}

std::size_t ConcurrentAlphabet::width() const {
  if (empty()) return 0;
  if (mode_ == AlphabetMode::thread_partition && conflicts_.empty()) return thread_count();
  std::vector<Bitset> adjacency(size(), Bitset(size()));
  for (LabelId a = 0; a < size(); ++a)
    for (LabelId b = 0; b < size(); ++b)
      if (a != b && independent(a, b)) adjacency[a].set(b);
  return max_clique_size(adjacency);
}

namespace {

void bron_kerbosch(const std::vector<Bitset>& adj, std::size_t depth, Bitset candidates,
                   Bitset excluded, std::size_t& best) {
  if (candidates.none() && excluded.none()) {
    best = std::max(best, depth);
    return;
  }
  if (depth + candidates.count() <= best) return;
  // Pivot: vertex of P u X with the most neighbours in P.
  std::size_t pivot = 0, pivot_degree = 0;
  bool have_pivot = false;
  auto consider = [&](std::size_t u) {
    Bitset nb = candidates;
    nb &= adj[u];
    const auto deg = nb.count();
    if (!have_pivot || deg > pivot_degree) {
      pivot = u;
      pivot_degree = deg;
      have_pivot = true;
    }
  };
  candidates.for_each(consider);
  excluded.for_each(consider);
  for (auto v : candidates.indices()) {
    if (adj[pivot].test(v)) continue;
    Bitset next_p = candidates;
    next_p &= adj[v];
    Bitset next_x = excluded;
    next_x &= adj[v];
    bron_kerbosch(adj, depth + 1, next_p, next_x, best);
    candidates.reset(v);
    excluded.set(v);
  }
}

}  // namespace

std::size_t max_clique_size(const std::vector<Bitset>& adjacency) {
  const auto n = adjacency.size();
  if (n == 0) return 0;
  Bitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  std::size_t best = 0;
  bron_kerbosch(adjacency, 0, all, Bitset(n), best);
  return best;
}

}  // namespace ptm

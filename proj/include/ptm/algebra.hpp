#ifndef PTM_ALGEBRA_HPP
#define PTM_ALGEBRA_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "ptm/label.hpp"
#include "ptm/pattern.hpp"

namespace ptm {

/// True iff `needle` is a (not necessarily contiguous) subsequence of `hay`.
template <class T>
bool is_subsequence(const std::vector<T>& needle, const std::vector<T>& hay) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < hay.size() && i < needle.size(); ++j)
    if (hay[j] == needle[i]) ++i;
  return i == needle.size();
}

namespace detail {

template <class T>
void merge_words(const std::vector<T>& u, const std::vector<T>& v, std::size_t i, std::size_t j,
                 std::vector<T>& cur, std::set<std::vector<T>>& out) {
  if (i == u.size() && j == v.size()) {
    out.insert(cur);
    return;
  }
  if (i < u.size() && j < v.size() && u[i] == v[j]) {
    cur.push_back(u[i]);
    merge_words(u, v, i + 1, j + 1, cur, out);
    cur.pop_back();
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    merge_words(u, v, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    merge_words(u, v, i, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// u (.) v: the subsequence-minimal words that contain both u and v as
/// subsequences.
///
/// Every minimal common supersequence is covered by an embedding of u and one
/// of v, so it arises from an alignment that either emits u[i], emits v[j], or
/// emits a shared letter u[i] == v[j]. The alignments are enumerated and the
/// non-minimal ones dropped; containment is monotone, so minimality only needs
/// the single-letter deletions checked.
template <class T>
std::set<std::vector<T>> shuffle_supersequences(const std::vector<T>& u, const std::vector<T>& v) {
  std::set<std::vector<T>> merged;
  std::vector<T> cur;
  cur.reserve(u.size() + v.size());
  detail::merge_words(u, v, 0, 0, cur, merged);

  std::set<std::vector<T>> out;
  for (const auto& w : merged) {
    bool minimal = true;
    for (std::size_t k = 0; k < w.size() && minimal; ++k) {
      std::vector<T> shorter;
      shorter.reserve(w.size() - 1);
      for (std::size_t m = 0; m < w.size(); ++m)
        if (m != k) shorter.push_back(w[m]);
      if (is_subsequence(u, shorter) && is_subsequence(v, shorter)) minimal = false;
    }
    if (minimal) out.insert(w);
  }
  return out;
}

GeneralizedPattern gp_union(const GeneralizedPattern& a, const GeneralizedPattern& b);
GeneralizedPattern gp_concat(const GeneralizedPattern& a, const GeneralizedPattern& b);
/// Pattern-by-pattern intersection is the union of patterns over the shuffle
/// supersequences of the two label sequences.
GeneralizedPattern gp_intersect(const GeneralizedPattern& a, const GeneralizedPattern& b);
/// For a generalized pattern L, L* = L u {epsilon}.
GeneralizedPattern gp_star(const GeneralizedPattern& g);

bool word_membership(const Pattern& p, const Word& w);
bool word_membership(const Disjunct& d, const Word& w);
bool word_membership(const GeneralizedPattern& g, const Word& w);

}  // namespace ptm

#endif  // PTM_ALGEBRA_HPP

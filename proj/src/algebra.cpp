#include "ptm/algebra.hpp"

#include <variant>

#include "ptm/error.hpp"

namespace ptm {

namespace {

void require_concrete(const GeneralizedPattern& g) {
  for (const auto& d : g.disjuncts)
    if (const auto* p = std::get_if<Pattern>(&d); p && !p->concrete())
      throw Error(ErrorCode::validation, "closure operations need single-label positions; expand first");
}

Disjunct concat_one(const Disjunct& a, const Disjunct& b) {
  if (std::holds_alternative<EmptyLang>(a) || std::holds_alternative<EmptyLang>(b)) return EmptyLang{};
  if (std::holds_alternative<EpsilonLang>(a)) return b;
  if (std::holds_alternative<EpsilonLang>(b)) return a;
  Pattern out = std::get<Pattern>(a);
  const auto& tail = std::get<Pattern>(b).positions;
  out.positions.insert(out.positions.end(), tail.begin(), tail.end());
  return out;
}

void intersect_one(const Disjunct& a, const Disjunct& b, std::vector<Disjunct>& out) {
  if (std::holds_alternative<EmptyLang>(a) || std::holds_alternative<EmptyLang>(b)) {
    out.emplace_back(EmptyLang{});
    return;
  }
  const auto* pa = std::get_if<Pattern>(&a);
  const auto* pb = std::get_if<Pattern>(&b);
  if (!pa && !pb) {
    out.emplace_back(EpsilonLang{});
    return;
  }
  if (!pa || !pb) {
    // {epsilon} meets a pattern only when the pattern is Sigma*.
    const auto* p = pa ? pa : pb;
    out.emplace_back(p->dimension() == 0 ? Disjunct{EpsilonLang{}} : Disjunct{EmptyLang{}});
    return;
  }
  for (const auto& w : shuffle_supersequences(pa->word(), pb->word())) out.emplace_back(Pattern::of(w));
}

}  // namespace

GeneralizedPattern gp_union(const GeneralizedPattern& a, const GeneralizedPattern& b) {
  GeneralizedPattern out = a;
  out.disjuncts.insert(out.disjuncts.end(), b.disjuncts.begin(), b.disjuncts.end());
  return out;
}

GeneralizedPattern gp_concat(const GeneralizedPattern& a, const GeneralizedPattern& b) {
  require_concrete(a);
  require_concrete(b);
  GeneralizedPattern out;
  for (const auto& x : a.disjuncts)
    for (const auto& y : b.disjuncts) out.disjuncts.push_back(concat_one(x, y));
  return out;
}

GeneralizedPattern gp_intersect(const GeneralizedPattern& a, const GeneralizedPattern& b) {
  require_concrete(a);
  require_concrete(b);
  GeneralizedPattern out;
  for (const auto& x : a.disjuncts)
    for (const auto& y : b.disjuncts) intersect_one(x, y, out.disjuncts);
  return out;
}

GeneralizedPattern gp_star(const GeneralizedPattern& g) {
  GeneralizedPattern kept;
  for (const auto& d : g.disjuncts)
    if (!std::holds_alternative<EmptyLang>(d)) kept.disjuncts.push_back(d);
  return gp_union(kept, GeneralizedPattern::of(EpsilonLang{}));
}

bool word_membership(const Pattern& p, const Word& w) {
  // Greedy earliest matching is optimal for subsequence containment.
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < p.dimension(); ++j) {
    const auto& spec = p.positions[i];
    if (std::find(spec.begin(), spec.end(), w[j]) != spec.end()) ++i;
  }
  return i == p.dimension();
}

bool word_membership(const Disjunct& d, const Word& w) {
  if (std::holds_alternative<EmptyLang>(d)) return false;
  if (std::holds_alternative<EpsilonLang>(d)) return w.empty();
  return word_membership(std::get<Pattern>(d), w);
}

bool word_membership(const GeneralizedPattern& g, const Word& w) {
  for (const auto& d : g.disjuncts)
    if (word_membership(d, w)) return true;
  return false;
}

}  // namespace ptm

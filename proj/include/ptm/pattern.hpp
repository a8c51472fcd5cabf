#ifndef PTM_PATTERN_HPP
#define PTM_PATTERN_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "ptm/label.hpp"

namespace ptm {

/// Nonempty set of labels admissible at one pattern position (kept sorted).
using PositionSpec = std::vector<Label>;

/// The language Sigma* a_1 Sigma* ... a_d Sigma*. Positions holding several
/// labels denote the union over all per-position choices; d = 0 is Sigma*.
struct Pattern {
  std::vector<PositionSpec> positions;

  static Pattern of(const Word& labels);

  std::size_t dimension() const noexcept { return positions.size(); }
  /// Every position is a single label.
  bool concrete() const noexcept;
  /// Label sequence of a concrete pattern.
  Word word() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct EmptyLang {
  friend bool operator==(const EmptyLang&, const EmptyLang&) = default;
};
struct EpsilonLang {
  friend bool operator==(const EpsilonLang&, const EpsilonLang&) = default;
};

using Disjunct = std::variant<EmptyLang, EpsilonLang, Pattern>;

/// Finite union of pattern languages, {epsilon} and the empty language.
struct GeneralizedPattern {
  std::vector<Disjunct> disjuncts;

  static GeneralizedPattern of(Disjunct d) { return {{std::move(d)}}; }
  static GeneralizedPattern of(const Word& labels) { return of(Pattern::of(labels)); }

  friend bool operator==(const GeneralizedPattern&, const GeneralizedPattern&) = default;
};

inline constexpr std::size_t default_expansion_cap = 1024;

/// Cartesian product of per-position choices, lexicographic in choice
/// indices. Throws ErrorCode::expansion_cap if the product exceeds `cap`.
std::vector<Pattern> expand_pattern(const Pattern& p, std::size_t cap = default_expansion_cap);

/// A concrete pattern tagged with the generalized-pattern disjunct it came from.
struct ExpandedDisjunct {
  std::size_t source;
  Disjunct language;
};

/// Expands every pattern disjunct; `cap` bounds the total number of concrete
/// patterns produced.
std::vector<ExpandedDisjunct> expand(const GeneralizedPattern& g, std::size_t cap = default_expansion_cap);

/// Same language with every pattern disjunct expanded.
GeneralizedPattern expanded(const GeneralizedPattern& g, std::size_t cap = default_expansion_cap);

}  // namespace ptm

#endif  // PTM_PATTERN_HPP

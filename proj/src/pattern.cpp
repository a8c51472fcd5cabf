#include "ptm/pattern.hpp"

#include <algorithm>
#include <string>

#include "ptm/error.hpp"

namespace ptm {

Pattern Pattern::of(const Word& labels) {
  Pattern p;
  p.positions.reserve(labels.size());
  for (const auto& l : labels) p.positions.push_back({l});
  return p;
}

bool Pattern::concrete() const noexcept {
  return std::all_of(positions.begin(), positions.end(),
                     [](const PositionSpec& s) { return s.size() == 1; });
}

Word Pattern::word() const {
  if (!concrete()) throw Error(ErrorCode::validation, "pattern has multi-label positions; expand it first");
  Word w;
  w.reserve(positions.size());
  for (const auto& s : positions) w.push_back(s.front());
  return w;
}

namespace {

std::size_t product_size(const Pattern& p, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& s : p.positions) {
    if (s.empty()) throw Error(ErrorCode::validation, "pattern position with no labels");
    if (total > cap / s.size()) return cap + 1;
    total *= s.size();
  }
  return total;
}

}  // namespace

std::vector<Pattern> expand_pattern(const Pattern& p, std::size_t cap) {
  const auto total = product_size(p, cap);
  if (total > cap)
    throw Error(ErrorCode::expansion_cap,
                "pattern expands to more than " + std::to_string(cap) + " concrete patterns");
  std::vector<Pattern> out;
  out.reserve(total);
  std::vector<std::size_t> choice(p.dimension(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    Pattern q;
    q.positions.reserve(p.dimension());
    for (std::size_t i = 0; i < p.dimension(); ++i) q.positions.push_back({p.positions[i][choice[i]]});
    out.push_back(std::move(q));
    // Odometer increment, last position fastest.
    for (std::size_t i = p.dimension(); i-- > 0;) {
      if (++choice[i] < p.positions[i].size()) break;
      choice[i] = 0;
    }
  }
  return out;
}

std::vector<ExpandedDisjunct> expand(const GeneralizedPattern& g, std::size_t cap) {
  std::vector<ExpandedDisjunct> out;
  std::size_t produced = 0;
  for (std::size_t i = 0; i < g.disjuncts.size(); ++i) {
    const auto& d = g.disjuncts[i];
    if (const auto* p = std::get_if<Pattern>(&d)) {
      for (auto& q : expand_pattern(*p, cap - produced)) {
        out.push_back({i, std::move(q)});
        ++produced;
      }
    } else {
      out.push_back({i, d});
    }
  }
  return out;
}

GeneralizedPattern expanded(const GeneralizedPattern& g, std::size_t cap) {
  GeneralizedPattern out;
  for (auto& e : expand(g, cap)) out.disjuncts.push_back(std::move(e.language));
  return out;
}

}  // namespace ptm

#ifndef PTM_ORACLE_HPP
#define PTM_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "ptm/nfa.hpp"
#include "ptm/pattern.hpp"
#include "ptm/trace.hpp"

namespace ptm {

inline constexpr std::size_t default_linearization_limit = 1'000'000;

/// Backtracking enumerator of the topological orders of the trace order, in
/// lexicographic event-id order.
class LinearizationCursor {
 public:
  explicit LinearizationCursor(const Trace& trace);

  /// Calls `visit` on each linearization until it returns false or `limit`
  /// orders were produced. Returns the number visited.
  std::size_t run(const std::function<bool(const std::vector<EventId>&)>& visit,
                  std::size_t limit = default_linearization_limit);
  /// True if the last run stopped before exhausting the orders.
  bool truncated() const noexcept { return truncated_; }

 private:
  bool descend(const std::function<bool(const std::vector<EventId>&)>& visit, std::size_t limit);

  std::vector<std::vector<EventId>> successors_;
  std::vector<std::size_t> pending_;  // unplaced predecessors per event
  std::vector<char> chosen_;
  std::vector<EventId> order_;
  std::size_t visited_ = 0;
  bool stop_ = false;
  bool truncated_ = false;
};

struct Linearizations {
  std::vector<std::vector<EventId>> orders;
  bool truncated = false;
};

Linearizations all_linearizations(const Trace& trace, std::size_t limit = default_linearization_limit);

struct OracleVerdict {
  bool member = false;
  /// The enumeration hit its limit before finding a member; `member == false`
  /// is then inconclusive.
  bool truncated = false;
  std::size_t examined = 0;
};

using Spec = std::variant<GeneralizedPattern, Nfa>;

/// Whether some linearization's label word lies in the language.
OracleVerdict predictive_membership_bruteforce(const Trace& trace, const Spec& spec,
                                               std::size_t limit = default_linearization_limit);

using BoolVector = std::vector<bool>;
using OvSets = std::vector<std::vector<BoolVector>>;

/// Some choice of one vector per set has all-zero pointwise product.
bool ov_bruteforce(const OvSets& sets);

}  // namespace ptm

#endif  // PTM_ORACLE_HPP

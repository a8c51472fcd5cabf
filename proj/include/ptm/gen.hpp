#ifndef PTM_GEN_HPP
#define PTM_GEN_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ptm/nfa.hpp"
#include "ptm/oracle.hpp"
#include "ptm/pattern.hpp"
#include "ptm/trace.hpp"

namespace ptm {

/// k sets of n boolean vectors of dimension d.
struct OvInstance {
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t n = 0;
  OvSets sets;

  /// Throws ErrorCode::validation on count or dimension mismatches.
  void validate() const;
  /// From rows of '0'/'1' strings, one list per set.
  static OvInstance from_strings(const std::vector<std::vector<std::string>>& sets);
};

/// A fixed instance with k = d = n = 3 that has a solution.
OvInstance ov_example_instance();
/// Coordinates are 1 with probability `density`.
OvInstance random_ov_instance(std::size_t k, std::size_t d, std::size_t n, std::uint64_t seed, double density = 0.5);

/// Separator op of the reduction (the comment character cannot be an op).
inline constexpr const char* ov_separator = "sep";
std::string ov_thread(std::size_t i);  // "p_i", 1-based
std::string ov_op(std::size_t j);      // "aj", 1-based

struct OvReduction {
  Trace trace;
  Nfa nfa;
};

/// Each set becomes a thread; every vector contributes its zero coordinates
/// followed by a separator. The automaton accepts words containing a block
/// of first coordinates, then a block of second coordinates, and so on.
OvReduction gen_ov(const OvInstance& instance);

/// Threads "t1".., ops "o1".., thread-partition alphabet where every unordered
/// op pair (including an op with itself) conflicts with probability
/// `conflict_probability`. All labels are registered up front, thread-major.
Trace gen_random_trace(std::size_t threads, std::size_t ops, std::size_t length, std::uint64_t seed,
                       double conflict_probability = 0.2);

enum class SamplePolicy { locality, diversity };

struct SampledPattern {
  Pattern pattern;
  std::vector<EventId> events;  // sampled positions, trace order
  bool fallback = false;        // locality window too short, whole trace used
};

/// Patterns built from the labels of `dim` sampled events. Locality picks one
/// of min(100, |trace|) equal windows; diversity spreads the picks over as
/// many threads as possible.
SampledPattern sample_pattern(const Trace& trace, std::size_t dim, SamplePolicy policy, std::uint64_t seed);

/// Window i of `parts` equal windows over n events: [i*n/parts, (i+1)*n/parts).
std::pair<std::size_t, std::size_t> locality_window(std::size_t n, std::size_t parts, std::size_t i);

/// Words containing two adjacent conflicting accesses ("w(x)"/"r(x)" ops) to
/// the same variable from different threads.
Nfa race_nfa(const std::vector<std::string>& threads, const std::vector<std::string>& vars);

}  // namespace ptm

#endif  // PTM_GEN_HPP

#ifndef PTM_CLI_HPP
#define PTM_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptm/baseline.hpp"
#include "ptm/gen.hpp"
#include "ptm/monitor.hpp"
#include "ptm/oracle.hpp"

namespace ptm {

enum ExitStatus : int { exit_match = 0, exit_no_match = 1, exit_usage = 2, exit_budget = 3 };

/// Everything one invocation of the tool needs; filled by the argument
/// parser or directly by tests.
struct RunConfig {
  std::string command;   // monitor | baseline | oracle | gen | bench | info
  std::string gen_kind;  // ov | random | pattern | race-nfa

  std::optional<std::string> trace;
  std::optional<std::string> alphabet;
  std::optional<std::string> spec;
  std::optional<std::string> nfa;
  std::optional<std::string> out;

  Engine engine = Engine::vc;
  std::string algorithm = "vc";  // bench: vc | afterset | baseline
  bool witness = false;
  bool json = false;
  std::optional<bool> early_exit;

  std::size_t max_ideals = default_max_ideals;
  std::size_t expansion_cap = default_expansion_cap;
  std::size_t oracle_limit = default_linearization_limit;
  std::size_t checkpoint_every = 0;
  std::uint64_t seed = 1;
  bool ideals = false;  // info: also count ideals

  // generators
  std::size_t threads = 2;
  std::size_t ops = 2;
  std::size_t length = 100;
  double conflict_probability = 0.2;
  std::size_t k = 3;
  std::size_t d = 3;
  std::size_t n = 3;
  double density = 0.5;
  bool example = false;
  std::size_t dim = 3;
  SamplePolicy policy = SamplePolicy::locality;
  std::vector<std::string> thread_names;
  std::vector<std::string> vars;

  /// Throws ErrorCode::validation on inconsistent settings.
  void validate() const;
};

/// Runs one command. Reports go to `out`, diagnostics to `err`; the result is
/// an ExitStatus.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ptm

#endif  // PTM_CLI_HPP

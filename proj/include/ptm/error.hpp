#ifndef PTM_ERROR_HPP
#define PTM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ptm {

enum class ErrorCode {
  unknown_label,
  expansion_cap,
  out_of_range,
  multiset_mismatch,
  label_mismatch,
  clock_mismatch,
  invalid_ideal,
  parse,
  validation,
  budget_exceeded,
  internal,
};

/// All library failures surface as ptm::Error; code() distinguishes them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ptm

#endif  // PTM_ERROR_HPP

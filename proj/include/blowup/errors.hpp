#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Machine-readable failure categories, used by the CLI to pick exit codes.
enum class ErrorCode {
  parse_error,          // bad input text
  window_violation,     // (j, p) outside the admissible support window
  dimension_mismatch,   // incompatible shapes fed to linear algebra
  certification_failure,// a truncation/window certificate did not reproduce
  non_stabilization,    // a limit did not stabilize within the hard horizon
  non_finite_length,    // colength truncations kept growing
  rank_deficient,       // torsion module where positive rank was required
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::window_violation: return "WindowViolation";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::certification_failure: return "CertificationFailure";
    case ErrorCode::non_stabilization: return "NonStabilization";
    case ErrorCode::non_finite_length: return "NonFiniteLength";
    case ErrorCode::rank_deficient: return "RankDeficient";
  }
  return "Error";
}

}  // namespace blowup

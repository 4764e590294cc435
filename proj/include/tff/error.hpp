#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tff {

enum class errc {
  not_dominated,
  does_not_fit,
  dimension_mismatch,
  invalid_ranks,
  invalid_certificate,
  invalid_shape,
  size_mismatch,
  alpha_out_of_range,
  invalid_alpha,
  alpha_not_greater_than_one,
  precondition_not_met,
  degenerate,
  invalid_multiplicity,
  not_a_tff_sequence,
  convergence_failure,
  parse_error,
};

inline std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::not_dominated: return "NotDominated";
    case errc::does_not_fit: return "DoesNotFit";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invalid_ranks: return "InvalidRanks";
    case errc::invalid_certificate: return "InvalidCertificate";
    case errc::invalid_shape: return "InvalidShape";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::alpha_out_of_range: return "AlphaOutOfRange";
    case errc::invalid_alpha: return "InvalidAlpha";
    case errc::alpha_not_greater_than_one: return "AlphaNotGreaterThanOne";
    case errc::precondition_not_met: return "PreconditionNotMet";
    case errc::degenerate: return "Degenerate";
    case errc::invalid_multiplicity: return "InvalidMultiplicity";
    case errc::not_a_tff_sequence: return "NotATFFSequence";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every library failure is reported through this type; `code()` is the
/// stable, machine-checkable part and `what()` carries the details.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace tff

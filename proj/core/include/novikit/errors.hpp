#pragma once

#include <stdexcept>
#include <string>

namespace novikit {

// Domain error with a stable machine-readable code alongside the message.
// Codes are part of the CLI contract (they surface in the JSON "error" field).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

namespace errc {
inline constexpr const char* zero_polynomial = "ZeroPolynomial";
inline constexpr const char* zero_value = "ZeroValue";
inline constexpr const char* zero_matrix = "ZeroMatrix";
inline constexpr const char* bad_shape = "BadShape";
inline constexpr const char* not_a_knot = "NotAKnot";
inline constexpr const char* no_free_quotient = "NoFreeQuotient";
inline constexpr const char* no_phi_nonzero_generator = "NoPhiNonzeroGenerator";
inline constexpr const char* not_normalizable = "NotNormalizable";
inline constexpr const char* unsupported_kernel = "UnsupportedKernel";
inline constexpr const char* strict_inequality_branch = "StrictInequalityBranch";
inline constexpr const char* empty_side = "EmptySide";
inline constexpr const char* not_surjective = "NotSurjective";
inline constexpr const char* parse = "ParseError";
inline constexpr const char* invalid = "InvalidInput";
}  // namespace errc

}  // namespace novikit

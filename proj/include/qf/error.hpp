#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qf {

enum class ErrorCode {
  InvalidArgument,
  NonUnitLeadingCoefficient,
  NotInIdeal,
  SizeLimitExceeded,
  ParseError,
  TopologyError,
  SignError,
  UnknownName,
  AxiomIViolation,
  AxiomIIViolation,
  AxiomIIIViolation,
  NotClosed,
  NotAHomomorphism,
  NotACocycle,
  InvalidDynamicalCocycle,
  EvenN,
  NotAKernelVector,
  NotAKnot,
  UnknownExample,
  Overflow,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type. `witness` carries a
/// human-readable counterexample (a triple of labels, a pair, a line number)
/// when the failing check has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message, std::string witness = {}) {
  throw Error(code, message, std::move(witness));
}

}  // namespace qf

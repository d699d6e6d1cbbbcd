#include "qf/error.hpp"

namespace qf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TopologyError: return "TopologyError";
    case ErrorCode::SignError: return "SignError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::AxiomIViolation: return "AxiomIViolation";
    case ErrorCode::AxiomIIViolation: return "AxiomIIViolation";
    case ErrorCode::AxiomIIIViolation: return "AxiomIIIViolation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::InvalidDynamicalCocycle: return "InvalidDynamicalCocycle";
    case ErrorCode::EvenN: return "EvenN";
    case ErrorCode::NotAKernelVector: return "NotAKernelVector";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace qf

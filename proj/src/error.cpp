#include "ivhinf/error.hpp"

namespace ivhinf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegreeOrder: return "DegreeOrder";
    case ErrorKind::DeltaRange: return "DeltaRange";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegenerateLeading: return "DegenerateLeading";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnstableClosedLoop: return "UnstableClosedLoop";
    case ErrorKind::UnstableDenominator: return "UnstableDenominator";
    case ErrorKind::UnstableFamily: return "UnstableFamily";
    case ErrorKind::TheoremPreconditionGap: return "TheoremPreconditionGap";
    case ErrorKind::NoUpperBracket: return "NoUpperBracket";
    case ErrorKind::HullMismatch: return "HullMismatch";
  }
  return "Unknown";
}

}  // namespace ivhinf

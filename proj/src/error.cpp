#include "gfpoly/error.hpp"

namespace gfpoly {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NonIntegerIntegral: return "NonIntegerIntegral";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::NotBinetEligible: return "NotBinetEligible";
    case Errc::NotTheoremGrade: return "NotTheoremGrade";
    case Errc::NotTyped: return "NotTyped";
    case Errc::NotFibonacciType: return "NotFibonacciType";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::DegenerateCenter: return "DegenerateCenter";
    case Errc::UnclassifiedPart4: return "UnclassifiedPart4";
    case Errc::FamilyNotCovered: return "FamilyNotCovered";
    case Errc::IndexError: return "IndexError";
    case Errc::ConstraintViolation: return "ConstraintViolation";
    case Errc::RequiresUnitG: return "RequiresUnitG";
    case Errc::NotAPurePower: return "NotAPurePower";
  }
  return "Unknown";
}

}  // namespace gfpoly

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfpoly {

enum class Errc {
  DivisionByZero,
  NotDivisible,
  NonIntegerIntegral,
  EmptyInput,
  ParseError,
  InvalidSpec,
  UnknownFamily,
  NotBinetEligible,
  NotTheoremGrade,
  NotTyped,
  NotFibonacciType,
  OutOfRange,
  OutOfBounds,
  DegenerateCenter,
  UnclassifiedPart4,
  FamilyNotCovered,
  IndexError,
  ConstraintViolation,
  RequiresUnitG,
  NotAPurePower,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying a typed error code. Every failure path in the library
/// throws this; callers that care about the reason inspect code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gfpoly

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetalab {

enum class ErrorKind {
  NotSymplectic,
  OddDimension,
  IndexOutOfRange,
  NotInSubgroup,
  DimensionMismatch,
  SingularCocycle,
  GenusTooLarge,
  NotAChain,
  DegreeOverflow,
  NotSymplecticMod2,
  GeneratorNotInStabilizer,
  NotConverged,
  NotSiegel,
  NoRootWithinTolerance,
  ThetaNearZero,
  SizeMismatch,
  CompatibilityViolated,
  NotFourthRoot,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace thetalab

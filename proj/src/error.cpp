#include "thetalab/error.hpp"

namespace thetalab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotInSubgroup: return "NotInSubgroup";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularCocycle: return "SingularCocycle";
    case ErrorKind::GenusTooLarge: return "GenusTooLarge";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::NotSymplecticMod2: return "NotSymplecticMod2";
    case ErrorKind::GeneratorNotInStabilizer: return "GeneratorNotInStabilizer";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::NotSiegel: return "NotSiegel";
    case ErrorKind::NoRootWithinTolerance: return "NoRootWithinTolerance";
    case ErrorKind::ThetaNearZero: return "ThetaNearZero";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::CompatibilityViolated: return "CompatibilityViolated";
    case ErrorKind::NotFourthRoot: return "NotFourthRoot";
  }
  return "Unknown";
}

}  // namespace thetalab

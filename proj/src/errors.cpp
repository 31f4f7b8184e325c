#include "pflab/errors.hpp"

namespace pflab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankOverflow: return "RankOverflow";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::NonTransversal: return "NonTransversal";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::UnsupportedHamiltonian: return "UnsupportedHamiltonian";
    case ErrorKind::NonRealSpectrum: return "NonRealSpectrum";
    case ErrorKind::SlitCrossing: return "SlitCrossing";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::RepeatedSpectrum: return "RepeatedSpectrum";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::NoRealOval: return "NoRealOval";
    case ErrorKind::TraceDiverged: return "TraceDiverged";
    case ErrorKind::PathTooClose: return "PathTooClose";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ZeroOnCircle: return "ZeroOnCircle";
    case ErrorKind::AliasingDetected: return "AliasingDetected";
    case ErrorKind::ResourceExceeded: return "ResourceExceeded";
    case ErrorKind::InternalDegreeViolation: return "InternalDegreeViolation";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NumericalFailure:
    case ErrorKind::NoRealOval:
    case ErrorKind::TraceDiverged:
    case ErrorKind::PathTooClose:
    case ErrorKind::StepUnderflow:
    case ErrorKind::ZeroOnBoundary:
    case ErrorKind::NonConvergent:
    case ErrorKind::SingularMatrix:
    case ErrorKind::ZeroOnCircle:
    case ErrorKind::AliasingDetected:
      return ErrorCategory::Numerical;
    case ErrorKind::ResourceExceeded:
      return ErrorCategory::Resource;
    case ErrorKind::InternalDegreeViolation:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Domain;
  }
}

}  // namespace pflab

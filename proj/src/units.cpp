#include "glenostatics/units.hpp"

#include <cmath>

#include "glenostatics/error.hpp"

namespace glenostatics {

namespace {
constexpr double kRadPerDeg = kPi / 180.0;
constexpr double kDegPerRad = 180.0 / kPi;
}  // namespace

double deg_to_rad(double degrees) {
  if (!std::isfinite(degrees)) throw Error(ErrorKind::NonFinite, "angle in degrees is not finite");
  return degrees * kRadPerDeg;
}

double rad_to_deg(double radians) {
  if (!std::isfinite(radians)) throw Error(ErrorKind::NonFinite, "angle in radians is not finite");
  return radians * kDegPerRad;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::InsertionOutsideHead: return "InsertionOutsideHead";
    case ErrorKind::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorKind::InconsistentLength: return "InconsistentLength";
    case ErrorKind::DegenerateAttachment: return "DegenerateAttachment";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SingularConfiguration: return "SingularConfiguration";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::PoseOutOfEnvelope: return "PoseOutOfEnvelope";
    case ErrorKind::NegativeRom: return "NegativeRom";
    case ErrorKind::ZeroHumanSpan: return "ZeroHumanSpan";
    case ErrorKind::ZeroElbowRadius: return "ZeroElbowRadius";
    case ErrorKind::NoInteriorMinimum: return "NoInteriorMinimum";
    case ErrorKind::NonFiniteObjective: return "NonFiniteObjective";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UnknownMotion: return "UnknownMotion";
  }
  return "Unknown";
}

}  // namespace glenostatics

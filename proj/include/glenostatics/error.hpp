#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glenostatics {

enum class ErrorKind {
  NonPositiveLength,
  InsertionOutsideHead,
  AngleOutOfRange,
  InconsistentLength,
  DegenerateAttachment,
  NonFinite,
  DomainError,
  SingularConfiguration,
  DegenerateTriangle,
  PoseOutOfEnvelope,
  NegativeRom,
  ZeroHumanSpan,
  ZeroElbowRadius,
  NoInteriorMinimum,
  NonFiniteObjective,
  InvalidArgument,
  ConfigError,
  UnknownMotion,
};

std::string_view to_string(ErrorKind kind);

/// Numerical or contract failure raised by the compute modules.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace glenostatics

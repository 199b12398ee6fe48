#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glenostatics/config.hpp"

namespace glenostatics {

/// A target value that one calibration routine back-solves for.
///   dislocation[@theta_h_deg]=F   scales kt (default theta_h = 30 deg)
///   flexion=T / extension=T       scales the deltoid attachment vector
///   abduction=T                   sets l9
///   adduction=T                   sets l10
///   rotation=T                    sets l18, keeping l11 : l14 : l18
struct Anchor {
  std::string name;
  double value = 0.0;
  std::optional<double> atDeg;
};

/// Parses "name=value" or "name@angle=value". Throws Error{InvalidArgument}.
Anchor parse_anchor(const std::string& text);

/// Peak of the configured torque surface for `m`.
double surface_peak(const RunConfig& cfg, Motion m, ArmMode mode);

/// Applies each anchor in order and records a note per changed field.
/// Returns the calibrated copy; the input is not modified.
RunConfig calibrate(const RunConfig& cfg, const std::vector<Anchor>& anchors, ArmMode mode);

}  // namespace glenostatics

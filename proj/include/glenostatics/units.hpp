#pragma once

#include <numbers>

namespace glenostatics {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Internal units are radians, meters and newtons. Degrees only cross the
// file and command-line boundaries.

/// Throws Error{NonFinite} for NaN or infinite input.
double deg_to_rad(double degrees);
double rad_to_deg(double radians);

}  // namespace glenostatics

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "glenostatics/model.hpp"
#include "glenostatics/solver.hpp"
#include "glenostatics/torque.hpp"

namespace glenostatics {

/// Equally spaced angle grid given in degrees. A single point sits at `startDeg`.
struct GridSpec {
  double startDeg = 0.0;
  double stopDeg = 0.0;
  std::size_t points = 2;

  std::vector<double> degrees() const;
  std::vector<double> radians() const;
};

struct SurfaceSweep {
  GridSpec axis1;
  std::optional<GridSpec> axis2;
};

struct Sweeps {
  std::vector<double> thetaHDeg{20.0, 30.0, 40.0, 50.0};
  std::size_t thetaCPoints = 61;

  SurfaceSweep flexion{{-40.0, 65.0, 106}, GridSpec{-32.0, 104.0, 137}};
  SurfaceSweep extension{{-40.0, 65.0, 106}, GridSpec{-32.0, 104.0, 137}};
  SurfaceSweep abduction{{-60.0, 40.0, 101}, std::nullopt};
  SurfaceSweep adduction{{-32.0, 104.0, 137}, std::nullopt};
  SurfaceSweep rotation{{0.0, 90.0, 91}, GridSpec{-90.0, 40.0, 131}};

  double equilibriumLoDeg = -90.0;
  double equilibriumHiDeg = 90.0;

  double romThetaFrDeg = 180.0;
  double romThetaFaDeg = 150.0;
  GridSpec romTheta0{0.0, 40.0, 9};

  double selfLockSocketHalfDeg = 0.0;

  const SurfaceSweep& surface(Motion m) const;
  SurfaceSweep& surface(Motion m);
};

struct Tolerances {
  double marginalDeg = 1.0;
  double marginalN = 1.0;
  solver::Settings solver{};
};

struct OutputSpec {
  std::string directory = "out";
  std::vector<std::string> formats{"csv", "json"};
  bool wants(const std::string& fmt) const;
};

struct RunConfig {
  ShoulderGeometry geometry;
  MuscleForces forces;
  RomEnvelope robotRom;
  RomEnvelope humanRom;
  Sweeps sweeps;
  Tolerances tolerances;
  OutputSpec output;
  std::map<std::string, std::string> notes;  // per-field provenance text
};

/// Every config invariant, including sweep grids against the robot envelope.
std::vector<Violation> validate_config(const RunConfig& cfg);

/// Parses a config document. Unknown keys and missing fields are errors;
/// throws Error{ConfigError} with the full violation list.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Serialises to the same schema (angles in degrees), 2-space indented.
std::string dump_config(const RunConfig& cfg);

}  // namespace glenostatics

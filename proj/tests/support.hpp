#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "glenostatics/config.hpp"

namespace test_support {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const glenostatics::RunConfig& reference() {
  static const glenostatics::RunConfig cfg =
      glenostatics::load_config(GLENOSTATICS_REFERENCE_CONFIG);
  return cfg;
}

/// A small valid geometry with round numbers, independent of the reference file.
inline glenostatics::ShoulderGeometry simple_geometry() {
  glenostatics::ShoulderGeometry g;
  g.R = 0.025;
  g.lt0 = 0.05;
  g.kt = 1.0e5;
  g.r1 = 0.025;
  g.r2 = 0.05;
  g.l1 = 0.3;
  g.l2 = 0.25;
  g.thetaD = 20.0 * std::acos(-1.0) / 180.0;
  g.thetaS = 10.0 * std::acos(-1.0) / 180.0;
  g.oa = glenostatics::Vec3(0.1, 0.0, 0.0);
  g.op = glenostatics::Vec3(0.1, 0.0, 0.0);
  g.l5 = 0.1;
  g.l6 = 0.3;
  g.l8 = 0.04;
  g.l9 = 0.03;
  g.l10 = 0.05;
  g.thetaK = 30.0 * std::acos(-1.0) / 180.0;
  g.l11 = 0.04;
  g.l18 = 0.03;
  g.thetaR0 = 40.0 * std::acos(-1.0) / 180.0;
  g.l14 = 0.03 * std::cos(g.thetaR0);
  return g;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace test_support

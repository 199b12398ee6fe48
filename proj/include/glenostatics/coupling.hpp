#pragma once

#include "glenostatics/model.hpp"
#include "glenostatics/solver.hpp"
#include "glenostatics/stability.hpp"
#include "glenostatics/units.hpp"

namespace glenostatics {

/// Biceps long-head coupling between elbow and shoulder.
struct CouplingConfig {
  double r1 = 0.0;
  double r2 = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double thetaD = 0.0;
  double thetaS = 0.0;

  static CouplingConfig from(const ShoulderGeometry& g);
};

/// Inextensible tendon: (thetaD + thetaE) r1 = thetaF r2.
double coupled_elbow_angle(double thetaD, double thetaE, double r1, double r2);

/// Height of the load point, l1 sin(thetaE) + l2 sin(thetaF - thetaE).
double potential_height(double thetaE, const CouplingConfig& cfg);

/// margin = 180 deg - (thetaD - thetaS + thetaE). `tol` in radians.
StabilityReport coupling_stability(double thetaD, double thetaS, double thetaE, double tol);

struct EquilibriumResult {
  double thetaE = 0.0;
  double thetaF = 0.0;
  double h = 0.0;
  bool atBoundary = false;
  StabilityReport stability;
};

struct EquilibriumOptions {
  double lo = -kHalfPi;
  double hi = kHalfPi;
  solver::Settings solver{};
  double marginalTol = 0.0;  // radians
  bool requireInterior = false;
};

/// Lowest-potential pose over [lo, hi]. A minimum on the bracket edge is
/// reported with atBoundary = true, or raised as Error{NoInteriorMinimum}
/// when requireInterior is set.
EquilibriumResult equilibrium_pose(const CouplingConfig& cfg, const EquilibriumOptions& opt);

}  // namespace glenostatics

#include "glenostatics/coupling.hpp"

#include <cmath>

#include "glenostatics/error.hpp"
#include "glenostatics/units.hpp"

namespace glenostatics {

CouplingConfig CouplingConfig::from(const ShoulderGeometry& g) {
  return {g.r1, g.r2, g.l1, g.l2, g.thetaD, g.thetaS};
}

double coupled_elbow_angle(double thetaD, double thetaE, double r1, double r2) {
  if (r2 == 0.0) throw Error(ErrorKind::ZeroElbowRadius, "elbow moment arm r2 is zero");
  return (thetaD + thetaE) * r1 / r2;
}

double potential_height(double thetaE, const CouplingConfig& cfg) {
  const double thetaF = coupled_elbow_angle(cfg.thetaD, thetaE, cfg.r1, cfg.r2);
  return cfg.l1 * std::sin(thetaE) + cfg.l2 * std::sin(thetaF - thetaE);
}

StabilityReport coupling_stability(double thetaD, double thetaS, double thetaE, double tol) {
  const double margin = rad_to_deg(kPi - (thetaD - thetaS + thetaE));
  return classify(margin, rad_to_deg(tol), Criterion::CouplingCondition);
}

EquilibriumResult equilibrium_pose(const CouplingConfig& cfg, const EquilibriumOptions& opt) {
  if (!(cfg.r2 > 0.0)) throw Error(ErrorKind::ZeroElbowRadius, "elbow moment arm r2 must be > 0");
  if (!(cfg.l1 > 0.0) || !(cfg.l2 > 0.0)) {
    throw Error(ErrorKind::NonPositiveLength, "l1 and l2 must be > 0");
  }
  const auto h = [&cfg](double e) { return potential_height(e, cfg); };
  const solver::OptimResult r = solver::minimize(h, solver::Bracket(opt.lo, opt.hi), opt.solver);
  if (r.atBoundary && opt.requireInterior) {
    throw Error(ErrorKind::NoInteriorMinimum,
                "potential minimum lies on the bracket edge at " +
                    std::to_string(rad_to_deg(r.x)) + " deg");
  }

  EquilibriumResult out;
  out.thetaE = r.x;
  out.thetaF = coupled_elbow_angle(cfg.thetaD, r.x, cfg.r1, cfg.r2);
  out.h = potential_height(r.x, cfg);
  out.atBoundary = r.atBoundary;
  out.stability = coupling_stability(cfg.thetaD, cfg.thetaS, r.x, opt.marginalTol);
  return out;
}

}  // namespace glenostatics

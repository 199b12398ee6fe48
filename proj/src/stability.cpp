#include "glenostatics/stability.hpp"

#include <cmath>
#include <sstream>

#include "glenostatics/error.hpp"
#include "glenostatics/units.hpp"

namespace glenostatics {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Stable: return "Stable";
    case Status::Marginal: return "Marginal";
    case Status::Unstable: return "Unstable";
  }
  return "Unknown";
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::SelfLock: return "SelfLock";
    case Criterion::CouplingCondition: return "CouplingCondition";
    case Criterion::DislocationPeak: return "DislocationPeak";
  }
  return "Unknown";
}

StabilityReport classify(double margin, double tol, Criterion criterion) {
  if (!std::isfinite(margin)) throw Error(ErrorKind::NonFinite, "stability margin is not finite");
  if (!(tol >= 0.0)) throw Error(ErrorKind::InvalidArgument, "marginal tolerance must be >= 0");
  Status s = Status::Marginal;
  if (margin > tol) {
    s = Status::Stable;
  } else if (margin < -tol) {
    s = Status::Unstable;
  }
  return {s, margin, criterion};
}

DislocationGeometry dislocation_geometry(double thetaC, double thetaH, double R, double lt0) {
  if (!std::isfinite(thetaC) || !std::isfinite(thetaH)) {
    throw Error(ErrorKind::NonFinite, "contact angles must be finite");
  }
  if (!(R > 0.0) || !(lt0 > 0.0)) {
    throw Error(ErrorKind::NonPositiveLength, "R and lt0 must be > 0");
  }
  if (thetaC < 0.0 || thetaC > thetaH) {
    std::ostringstream os;
    os << "contact angle thetaC = " << thetaC << " outside [0, thetaH = " << thetaH << "]";
    throw Error(ErrorKind::DomainError, os.str());
  }
  if (thetaH >= kHalfPi) throw Error(ErrorKind::DomainError, "thetaH must be below 90 deg");

  DislocationGeometry d;
  d.lss = R * (std::sin(thetaH) - std::sin(thetaC));
  d.ls = lt0 + R * (std::cos(thetaC) - std::cos(thetaH));
  d.ls1 = std::hypot(d.ls, d.lss);
  d.thetaA = std::atan2(d.lss, d.ls);
  return d;
}

DislocationState dislocation_state(double thetaC, double thetaH, const ShoulderGeometry& g) {
  if (thetaC >= kHalfPi) throw Error(ErrorKind::SingularConfiguration, "tan(thetaC) diverges");
  const DislocationGeometry d = dislocation_geometry(thetaC, thetaH, g.R, g.lt0);

  DislocationState s{};
  s.thetaC = thetaC;
  s.lss = d.lss;
  s.ls = d.ls;
  s.ls1 = d.ls1;
  s.thetaA = d.thetaA;
  // At onset ls1 == lt0 exactly, so the tension and everything after it is 0.
  s.ft = g.kt * (d.ls1 - g.lt0);
  const double sin_a = d.lss / d.ls1;
  const double cos_a = d.ls / d.ls1;
  s.fs = s.ft * cos_a / std::cos(thetaC);
  s.fe = s.ft * (sin_a + cos_a * std::tan(thetaC));
  return s;
}

double dislocation_force(double thetaC, double thetaH, const ShoulderGeometry& g) {
  return dislocation_state(thetaC, thetaH, g).fe;
}

PeakForce max_dislocation_force(double thetaH, const ShoulderGeometry& g,
                                const solver::Settings& s) {
  if (!(thetaH > 0.0) || !(thetaH < kHalfPi)) {
    throw Error(ErrorKind::DomainError, "thetaH must lie in (0, 90) deg");
  }
  const auto fe = [&](double c) { return dislocation_force(c, thetaH, g); };
  const solver::OptimResult r = solver::maximize(fe, solver::Bracket(0.0, thetaH), s);
  return {r.fx, r.x};
}

StabilityReport dislocation_status(double load, double thetaH, const ShoulderGeometry& g,
                                   double tolNewtons, const solver::Settings& s) {
  const PeakForce p = max_dislocation_force(thetaH, g, s);
  return classify(p.feMax - load, tolNewtons, Criterion::DislocationPeak);
}

StabilityReport self_lock_status(double thetaD, double thetaSocketHalf, double tol) {
  if (!(thetaD >= 0.0 && thetaD <= kPi)) {
    throw Error(ErrorKind::AngleOutOfRange, "scapula angle thetaD must lie in [0, 180] deg");
  }
  if (!(thetaSocketHalf >= 0.0 && thetaSocketHalf < kHalfPi)) {
    throw Error(ErrorKind::AngleOutOfRange, "socket half-arc must lie in [0, 90) deg");
  }
  const double margin = rad_to_deg(kHalfPi - (thetaD + thetaSocketHalf));
  return classify(margin, rad_to_deg(tol), Criterion::SelfLock);
}

RomFromContact rom_from_contact(double thetaFr, double theta0r, double thetaFa, double theta0a) {
  const RomFromContact r{thetaFr - 2.0 * theta0r, thetaFa - theta0a};
  if (!std::isfinite(r.thetaR33) || !std::isfinite(r.thetaR32)) {
    throw Error(ErrorKind::NonFinite, "contact angles must be finite");
  }
  if (r.thetaR33 < 0.0) throw Error(ErrorKind::NegativeRom, "thetaFr < 2 theta0r");
  if (r.thetaR32 < 0.0) throw Error(ErrorKind::NegativeRom, "thetaFa < theta0a");
  return r;
}

std::array<double, 3> rom_coverage(const RomEnvelope& robot, const RomEnvelope& human) {
  std::array<double, 3> out{};
  for (MotionGroup g : kMotionGroups) {
    const double h = human[g].span();
    if (!(h > 0.0)) {
      throw Error(ErrorKind::ZeroHumanSpan,
                  std::string("human span is zero for ") + std::string(to_string(g)));
    }
    out[static_cast<int>(g)] = 100.0 * robot[g].span() / h;
  }
  return out;
}

}  // namespace glenostatics

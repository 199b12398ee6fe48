#pragma once

#include <array>
#include <string_view>

#include "glenostatics/model.hpp"
#include "glenostatics/solver.hpp"

namespace glenostatics {

enum class Status { Stable, Marginal, Unstable };
enum class Criterion { SelfLock, CouplingCondition, DislocationPeak };

std::string_view to_string(Status s);
std::string_view to_string(Criterion c);

/// Classification plus the margin that produced it. The margin is in degrees
/// for SelfLock / CouplingCondition and in newtons for DislocationPeak.
struct StabilityReport {
  Status status = Status::Stable;
  double margin = 0.0;
  Criterion criterion = Criterion::SelfLock;
};

/// Marginal iff |margin| <= tol, Stable above, Unstable below.
StabilityReport classify(double margin, double tol, Criterion criterion);

// --- incomplete ball-and-socket dislocation --------------------------------

struct DislocationGeometry {
  double lss;     // |SS'|, tendon end displacement
  double ls;      // horizontal tendon run
  double ls1;     // stretched tendon length |OS'|
  double thetaA;  // tendon inclination
};

/// Tendon geometry when the contact edge has slid from thetaH to thetaC.
/// Requires 0 <= thetaC <= thetaH < pi/2 and R, lt0 > 0.
DislocationGeometry dislocation_geometry(double thetaC, double thetaH, double R, double lt0);

struct DislocationState {
  double thetaC;
  double lss, ls, ls1;
  double thetaA;
  double ft;  // tendon tension
  double fs;  // socket support
  double fe;  // axial load in equilibrium
};

/// Full force balance at contact angle thetaC. The support force is
/// eliminated in closed form, fe = ft (sin thetaA + cos thetaA tan thetaC).
DislocationState dislocation_state(double thetaC, double thetaH, const ShoulderGeometry& g);

double dislocation_force(double thetaC, double thetaH, const ShoulderGeometry& g);

struct PeakForce {
  double feMax;
  double thetaCStar;
};

/// Largest axial load over thetaC in [0, thetaH], located by a grid sweep
/// plus golden-section refinement.
PeakForce max_dislocation_force(double thetaH, const ShoulderGeometry& g,
                                const solver::Settings& s = {});

/// Load margin feMax - load (newtons) against the peak the joint can resist.
StabilityReport dislocation_status(double load, double thetaH, const ShoulderGeometry& g,
                                   double tolNewtons, const solver::Settings& s = {});

// --- self-locking -----------------------------------------------------------

/// Self-locking holds while the socket edge S2 stays below the head centre
/// O1. margin = 90 deg - (thetaD + thetaSocketHalf). `tol` in radians.
StabilityReport self_lock_status(double thetaD, double thetaSocketHalf, double tol);

// --- range of motion --------------------------------------------------------

struct RomFromContact {
  double thetaR33;  // rotation range
  double thetaR32;  // abduction/adduction range
};

/// thetaR33 = thetaFr - 2 theta0r, thetaR32 = thetaFa - theta0a.
/// Throws Error{NegativeRom} if either range would be negative.
RomFromContact rom_from_contact(double thetaFr, double theta0r, double thetaFa, double theta0a);

/// 100 * robot span / human span, per motion group (indexed by MotionGroup).
std::array<double, 3> rom_coverage(const RomEnvelope& robot, const RomEnvelope& human);

}  // namespace glenostatics

#include "glenostatics/model.hpp"

#include <cmath>
#include <sstream>

#include "glenostatics/units.hpp"

namespace glenostatics {

namespace {

// Relative slack for equality-style invariants (|oa| == l5, insertion on the
// head surface) so that values written with finite precision still validate.
constexpr double kRelSlack = 1e-9;

class Collector {
 public:
  void add(ErrorKind kind, std::string field, std::string message) {
    out_.push_back({kind, std::move(field), std::move(message)});
  }

  void finite(const char* field, double v) {
    if (!std::isfinite(v)) add(ErrorKind::NonFinite, field, "value is not finite");
  }

  void positive(const char* field, double v) {
    if (!std::isfinite(v)) {
      add(ErrorKind::NonFinite, field, "value is not finite");
    } else if (!(v > 0.0)) {
      std::ostringstream os;
      os << "must be > 0, got " << v;
      add(ErrorKind::NonPositiveLength, field, os.str());
    }
  }

  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

}  // namespace

std::string_view to_string(MotionGroup group) {
  switch (group) {
    case MotionGroup::FlexionExtension: return "flexion_extension";
    case MotionGroup::AdductionAbduction: return "adduction_abduction";
    case MotionGroup::Rotation: return "rotation";
  }
  return "unknown";
}

std::vector<Violation> validate_geometry(const ShoulderGeometry& g) {
  Collector c;
  c.positive("R", g.R);
  c.positive("lt0", g.lt0);
  c.positive("r1", g.r1);
  c.positive("r2", g.r2);
  c.positive("l1", g.l1);
  c.positive("l2", g.l2);
  c.positive("l5", g.l5);
  c.positive("l6", g.l6);
  c.positive("l8", g.l8);
  c.positive("l9", g.l9);
  c.positive("l10", g.l10);
  c.positive("l11", g.l11);
  c.positive("l14", g.l14);
  c.positive("l18", g.l18);

  if (!std::isfinite(g.kt)) {
    c.add(ErrorKind::NonFinite, "kt", "value is not finite");
  } else if (g.kt < 0.0) {
    c.add(ErrorKind::NonPositiveLength, "kt", "tendon stiffness must be >= 0");
  }

  c.finite("thetaD", g.thetaD);
  c.finite("thetaS", g.thetaS);
  c.finite("thetaK", g.thetaK);
  c.finite("thetaR0", g.thetaR0);
  for (int i = 0; i < 3; ++i) {
    c.finite("oa", g.oa[i]);
    c.finite("op", g.op[i]);
  }

  if (std::isfinite(g.thetaS) && !(g.thetaS > 0.0 && g.thetaS < kPi)) {
    c.add(ErrorKind::AngleOutOfRange, "thetaS", "socket half-arc must lie in (0, 180) deg");
  }
  const bool r0_ok = std::isfinite(g.thetaR0) && g.thetaR0 >= 0.0 && g.thetaR0 < kHalfPi;
  if (std::isfinite(g.thetaR0) && !r0_ok) {
    c.add(ErrorKind::AngleOutOfRange, "thetaR0", "initial insertion angle must lie in [0, 90) deg");
  }

  if (g.l14 > 0.0 && g.l18 > 0.0) {
    if (g.l14 > g.l18) {
      std::ostringstream os;
      os << "l14 = " << g.l14 << " exceeds head radius l18 = " << g.l18;
      c.add(ErrorKind::InsertionOutsideHead, "l14", os.str());
    } else if (r0_ok && g.l14 / std::cos(g.thetaR0) > g.l18 * (1.0 + kRelSlack)) {
      // The insertion Ts sits at l14 / cos(thetaR0) from the head centre.
      std::ostringstream os;
      os << "insertion distance l14 / cos(thetaR0) = " << g.l14 / std::cos(g.thetaR0)
         << " exceeds head radius l18 = " << g.l18;
      c.add(ErrorKind::InsertionOutsideHead, "l14", os.str());
    }
  }

  const double oa_norm = g.oa.norm();
  if (g.l5 > 0.0 && std::isfinite(oa_norm) && std::abs(oa_norm - g.l5) > kRelSlack * g.l5) {
    std::ostringstream os;
    os << "|oa| = " << oa_norm << " does not match l5 = " << g.l5;
    c.add(ErrorKind::InconsistentLength, "oa", os.str());
  }
  if (!(oa_norm > 0.0)) c.add(ErrorKind::NonPositiveLength, "oa", "attachment at the origin");
  const double op_norm = g.op.norm();
  if (!(op_norm > 0.0)) c.add(ErrorKind::NonPositiveLength, "op", "attachment at the origin");

  // A attachment at exactly |ON''| could coincide with the insertion and
  // collapse the deltoid triangle.
  if (g.l6 > 0.0) {
    if (std::abs(oa_norm - g.l6) <= kRelSlack * g.l6) {
      c.add(ErrorKind::DegenerateAttachment, "oa", "|oa| equals l6; triangle AON'' can collapse");
    }
    if (std::abs(op_norm - g.l6) <= kRelSlack * g.l6) {
      c.add(ErrorKind::DegenerateAttachment, "op", "|op| equals l6; triangle can collapse");
    }
  }
  if (g.l11 > 0.0 && g.l18 > 0.0 && g.l11 <= g.l18) {
    c.add(ErrorKind::DegenerateAttachment, "l11",
          "rotation motor must sit outside the humeral head");
  }
  return c.take();
}

std::vector<Violation> validate_forces(const MuscleForces& f) {
  Collector c;
  const std::pair<const char*, double> items[] = {{"ft1", f.ft1}, {"ft2", f.ft2}, {"ft3", f.ft3},
                                                  {"ft4", f.ft4}, {"ft5", f.ft5}, {"ft6", f.ft6}};
  for (const auto& [name, v] : items) {
    if (!std::isfinite(v)) {
      c.add(ErrorKind::NonFinite, name, "value is not finite");
    } else if (v < 0.0) {
      c.add(ErrorKind::InvalidArgument, name, "tendons cannot push; tension must be >= 0");
    }
  }
  return c.take();
}

std::vector<Violation> validate_envelope(const RomEnvelope& env, std::string_view name) {
  Collector c;
  for (MotionGroup g : kMotionGroups) {
    const AngleRange& r = env[g];
    const std::string field = std::string(name) + "." + std::string(to_string(g));
    if (!std::isfinite(r.min) || !std::isfinite(r.max)) {
      c.add(ErrorKind::NonFinite, field, "range bound is not finite");
    } else if (!(r.min < r.max)) {
      c.add(ErrorKind::AngleOutOfRange, field, "range min must be < max");
    }
  }
  return c.take();
}

std::vector<Violation> validate_geometry_in_envelope(const ShoulderGeometry& g,
                                                     const RomEnvelope& robot) {
  Collector c;
  if (g.thetaR0 + robot[MotionGroup::Rotation].max >= kHalfPi) {
    c.add(ErrorKind::AngleOutOfRange, "thetaR0",
          "thetaR0 + max rotation must stay below 90 deg");
  }
  if (g.thetaR0 + robot[MotionGroup::Rotation].min <= -kHalfPi) {
    c.add(ErrorKind::AngleOutOfRange, "thetaR0",
          "thetaR0 + min rotation must stay above -90 deg");
  }
  return c.take();
}

const ShoulderGeometry& checked(const ShoulderGeometry& g) {
  auto v = validate_geometry(g);
  if (!v.empty()) throw Error(ErrorKind::ConfigError, describe(v));
  return g;
}

void validate_pose(const JointPose& pose, const RomEnvelope& envelope) {
  const double angles[] = {pose.theta31, pose.theta32, pose.theta33};
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(angles[i])) throw Error(ErrorKind::NonFinite, "pose angle is not finite");
    const auto group = static_cast<MotionGroup>(i);
    if (!envelope[group].contains(angles[i])) {
      std::ostringstream os;
      os << to_string(group) << " angle " << rad_to_deg(angles[i]) << " deg outside ["
         << rad_to_deg(envelope[group].min) << ", " << rad_to_deg(envelope[group].max) << "]";
      throw Error(ErrorKind::PoseOutOfEnvelope, os.str());
    }
  }
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << '\n';
    os << to_string(violations[i].kind) << " [" << violations[i].field << "] "
       << violations[i].message;
  }
  return os.str();
}

}  // namespace glenostatics

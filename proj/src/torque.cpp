#include "glenostatics/torque.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "glenostatics/units.hpp"

namespace glenostatics {

namespace {

constexpr double kDegenerateLength = 1e-12;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// cos via the complementary sine so that a right angle gives exactly 0.
double cos_exact_at_right_angle(double x) { return std::sin(kHalfPi - x); }

}  // namespace

std::string_view to_string(Motion m) {
  switch (m) {
    case Motion::Flexion: return "flexion";
    case Motion::Extension: return "extension";
    case Motion::Abduction: return "abduction";
    case Motion::Adduction: return "adduction";
    case Motion::Rotation: return "rotation";
  }
  return "unknown";
}

std::string_view to_string(ArmMode m) {
  return m == ArmMode::Verbatim ? "verbatim" : "corrected";
}

Motion parse_motion(std::string_view name) {
  for (Motion m : {Motion::Flexion, Motion::Extension, Motion::Abduction, Motion::Adduction,
                   Motion::Rotation}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorKind::UnknownMotion, "unknown motion '" + std::string(name) + "'");
}

ArmMode parse_arm_mode(std::string_view name) {
  if (name == "verbatim") return ArmMode::Verbatim;
  if (name == "corrected") return ArmMode::Corrected;
  throw Error(ErrorKind::InvalidArgument, "unknown arm mode '" + std::string(name) + "'");
}

bool is_two_dimensional(Motion m) {
  return m == Motion::Flexion || m == Motion::Extension || m == Motion::Rotation;
}

Vec3 humeral_insertion(double theta31, double theta32, double l6) {
  return {-l6 * std::cos(kHalfPi - theta32) * std::cos(theta31), l6 * std::sin(theta31),
          -l6 * std::sin(kHalfPi - theta32)};
}

DeltoidArm deltoid_arm(const Vec3& attachment, double theta31, double theta32, double l6,
                       ArmMode mode) {
  const Vec3 n = humeral_insertion(theta31, theta32, l6);
  const double l5 = attachment.norm();
  DeltoidArm arm{};
  arm.cosThetaM = clamp_unit(attachment.dot(n) / (l5 * l6));
  arm.sinThetaM = attachment.cross(n).norm() / (l5 * l6);
  arm.l4 = std::sqrt(std::max(0.0, l5 * l5 + l6 * l6 - 2.0 * l5 * l6 * arm.cosThetaM));
  if (arm.l4 <= kDegenerateLength) {
    throw Error(ErrorKind::DegenerateTriangle, "attachment coincides with the humeral insertion");
  }
  const double divisor = mode == ArmMode::Verbatim ? 2.0 * arm.l4 : arm.l4;
  arm.l7 = l5 * l6 * arm.sinThetaM / divisor;
  return arm;
}

double flexion_torque(double theta31, double theta32, double ft1, const ShoulderGeometry& g,
                      ArmMode mode) {
  return ft1 * deltoid_arm(g.oa, theta31, theta32, g.l6, mode).l7;
}

double extension_torque(double theta31, double theta32, double ft1, const ShoulderGeometry& g,
                        ArmMode mode) {
  return ft1 * deltoid_arm(g.op, theta31, theta32, g.l6, mode).l7;
}

AbductionTorque abduction_torque(double theta33, double ft2, double ft3, double ft4,
                                 const ShoulderGeometry& g) {
  if (!std::isfinite(theta33)) throw Error(ErrorKind::NonFinite, "theta33 is not finite");
  if (std::abs(theta33) > deg_to_rad(60.0)) {
    throw Error(ErrorKind::PoseOutOfEnvelope, "abduction model holds for |theta33| <= 60 deg");
  }
  const double along = g.l8 + g.l9 * std::cos(theta33);
  const double across = g.l9 * std::sin(theta33);
  AbductionTorque t{};
  t.cosThetaBs = along / std::sqrt(along * along + across * across);
  t.supraspinatus = ft2 * g.l9 * t.cosThetaBs;
  t.biceps = ft3 * g.l9 * t.cosThetaBs;
  t.tau32b1 = (ft2 + ft3) * g.l9 * t.cosThetaBs;
  // Contact point swing on the head is taken as half the rotation.
  t.tau32b2 = ft4 * g.l9 * std::cos(0.5 * theta33);
  t.total = t.tau32b1 + t.tau32b2;
  return t;
}

double adduction_torque(double theta32, double ft5, const ShoulderGeometry& g) {
  if (!std::isfinite(theta32)) throw Error(ErrorKind::NonFinite, "theta32 is not finite");
  return ft5 * g.l10 * std::cos(g.thetaK - theta32);
}

RotationArm rotation_arm(double theta32, double theta33, const ShoulderGeometry& g) {
  if (!std::isfinite(theta32) || !std::isfinite(theta33)) {
    throw Error(ErrorKind::NonFinite, "rotation pose is not finite");
  }
  if (theta32 < 0.0 || theta32 > kHalfPi) {
    throw Error(ErrorKind::PoseOutOfEnvelope, "rotation arm needs theta32 in [0, 90] deg");
  }
  const double phi = g.thetaR0 + theta33;
  if (!(std::abs(phi) < kHalfPi)) {
    throw Error(ErrorKind::PoseOutOfEnvelope, "thetaR0 + theta33 must stay inside (-90, 90) deg");
  }

  const double s32 = std::sin(theta32);
  const double c32 = cos_exact_at_right_angle(theta32);

  RotationArm a{};
  a.l14p = g.l14 * std::cos(phi) / std::cos(g.thetaR0);
  a.l15 = a.l14p * s32;
  // Similar triangles TPA and MOA: l16 = l11 l15 / (l11 + l14' cos theta32).
  a.l16 = a.l15 / (1.0 + a.l14p * c32 / g.l11);
  if (a.l16 > g.l18 * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "wrap circle offset l16 = " << a.l16 << " exceeds head radius " << g.l18;
    throw Error(ErrorKind::DomainError, os.str());
  }
  a.l12 = std::sqrt(std::max(0.0, (g.l18 - a.l16) * (g.l18 + a.l16)));
  // cos(pi - theta32) = -cos(theta32)
  a.l17 = std::sqrt(g.l11 * g.l11 + a.l14p * a.l14p + 2.0 * g.l11 * a.l14p * c32);
  // sin(pi - theta32) = sin(theta32)
  a.thetaN = std::asin(clamp_unit(g.l11 * s32 / a.l17));
  a.lm0 = a.l12 * std::cos(a.thetaN);
  return a;
}

double rotation_torque(double theta32, double theta33, double ft6, const ShoulderGeometry& g) {
  return ft6 * rotation_arm(theta32, theta33, g).lm0;
}

double moment_arm_virtual_work(const std::function<double(double)>& tendonLength, double theta,
                               double h) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::NonFinite, "theta is not finite");
  if (!(h >= 1e-7 && h <= 1e-3)) {
    throw Error(ErrorKind::InvalidArgument, "finite-difference step must lie in [1e-7, 1e-3]");
  }
  const double up = tendonLength(theta + h);
  const double down = tendonLength(theta - h);
  const double arm = std::abs(up - down) / (2.0 * h);
  if (!std::isfinite(arm)) throw Error(ErrorKind::NonFinite, "tendon length is not finite");
  return arm;
}

double rotation_tendon_length(double theta32, double theta33, const ShoulderGeometry& g) {
  // Frame: x lateral (initial OT), z up, y anterior. The section plane is xz.
  const Vec3 lateral(1.0, 0.0, 0.0);
  const Vec3 up(0.0, 0.0, 1.0);
  const Vec3 anterior(0.0, 1.0, 0.0);

  const Vec3 motor = -g.l11 * lateral;
  const Vec3 e_t = std::cos(theta32) * lateral + std::sin(theta32) * up;
  const double phi = g.thetaR0 + theta33;
  const double r_ins = g.l14 / std::cos(g.thetaR0);
  const Vec3 insertion = r_ins * (std::cos(phi) * e_t + std::sin(phi) * anterior);
  const Vec3 projected = r_ins * std::cos(phi) * e_t;

  // The tendon lies in the plane through A and T spanned by the tendon line
  // and the anterior axis; that plane cuts the head in the wrap circle.
  const Vec3 along = (projected - motor).normalized();
  const Vec3 normal = along.cross(anterior).normalized();
  const Vec3 centre = motor.dot(normal) * normal;
  const double rho2 = g.l18 * g.l18 - centre.squaredNorm();
  if (!(rho2 > 0.0)) throw Error(ErrorKind::DomainError, "tendon plane misses the humeral head");
  const double rho = std::sqrt(rho2);

  const Vec3 to_motor = motor - centre;
  const double a = to_motor.norm();
  const Vec3 rel = insertion - centre;
  const double beta = std::atan2(rel.dot(anterior), rel.dot(along));
  const double tangent = kPi - std::acos(rho / a);
  if (beta >= tangent) return (motor - insertion).norm();
  return std::sqrt(a * a - rho * rho) + rho * (tangent - beta);
}

double deltoid_tendon_length(const Vec3& attachment, double theta31, double theta32, double l6) {
  return (attachment - humeral_insertion(theta31, theta32, l6)).norm();
}

MomentArmPair rotation_arm_pair(double theta32, double theta33, const ShoulderGeometry& g,
                                double h) {
  MomentArmPair p{};
  p.closedFormArm = rotation_arm(theta32, theta33, g).lm0;
  p.vwArm = moment_arm_virtual_work(
      [&](double t33) { return rotation_tendon_length(theta32, t33, g); }, theta33, h);
  p.ratio = p.vwArm / p.closedFormArm;
  return p;
}

TorqueSurface::Peak TorqueSurface::max() const {
  Peak best{values.at(0), 0, 0};
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (at(i, j) > best.value) best = {at(i, j), i, j};
    }
  }
  return best;
}

TorqueSurface torque_surface(Motion motion, const std::vector<double>& grid1,
                             const std::optional<std::vector<double>>& grid2,
                             const MuscleForces& forces, const ShoulderGeometry& g,
                             ArmMode mode) {
  if (grid1.empty()) throw Error(ErrorKind::InvalidArgument, "empty axis grid");
  if (is_two_dimensional(motion) != grid2.has_value()) {
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(motion)) +
                                                (grid2 ? " takes a single axis grid"
                                                       : " needs two axis grids"));
  }
  if (grid2 && grid2->empty()) throw Error(ErrorKind::InvalidArgument, "empty axis grid");

  TorqueSurface s;
  s.motion = motion;
  std::function<double(double, double, std::size_t)> cell;
  switch (motion) {
    case Motion::Flexion:
      s.axis1 = {"theta31", grid1};
      s.axis2 = Axis{"theta32", *grid2};
      s.muscle = "deltoid_anterior";
      s.forceUsed = forces.ft1;
      cell = [&](double a, double b, std::size_t) {
        return flexion_torque(a, b, forces.ft1, g, mode);
      };
      break;
    case Motion::Extension:
      s.axis1 = {"theta31", grid1};
      s.axis2 = Axis{"theta32", *grid2};
      s.muscle = "deltoid_posterior";
      s.forceUsed = forces.ft1;
      cell = [&](double a, double b, std::size_t) {
        return extension_torque(a, b, forces.ft1, g, mode);
      };
      break;
    case Motion::Abduction:
      s.axis1 = {"theta33", grid1};
      s.muscle = "supraspinatus+biceps_long_head+deltoid_middle";
      s.forceUsed = forces.ft2 + forces.ft3 + forces.ft4;
      s.tauB1.resize(grid1.size());
      s.tauB2.resize(grid1.size());
      cell = [&](double a, double, std::size_t k) {
        const AbductionTorque t = abduction_torque(a, forces.ft2, forces.ft3, forces.ft4, g);
        s.tauB1[k] = t.tau32b1;
        s.tauB2[k] = t.tau32b2;
        return t.total;
      };
      break;
    case Motion::Adduction:
      s.axis1 = {"theta32", grid1};
      s.muscle = "triceps_long_head";
      s.forceUsed = forces.ft5;
      cell = [&](double a, double, std::size_t) { return adduction_torque(a, forces.ft5, g); };
      break;
    case Motion::Rotation:
      s.axis1 = {"theta32", grid1};
      s.axis2 = Axis{"theta33", *grid2};
      s.muscle = "subscapularis/infraspinatus";
      s.forceUsed = forces.ft6;
      cell = [&](double a, double b, std::size_t) { return rotation_torque(a, b, forces.ft6, g); };
      break;
  }

  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();
  s.values.resize(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double a = grid1[i];
      const double b = grid2 ? (*grid2)[j] : 0.0;
      try {
        const double v = cell(a, b, i * cols + j);
        if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "torque is not finite");
        s.values[i * cols + j] = v;
      } catch (const Error& e) {
        std::ostringstream os;
        os.precision(10);
        os << "cell (" << i << ", " << j << ") " << s.axis1.name << " = " << rad_to_deg(a)
           << " deg";
        if (grid2) os << ", " << s.axis2->name << " = " << rad_to_deg(b) << " deg";
        os << ": " << e.what();
        throw CellError(e.kind(), os.str(), i, j);
      }
    }
  }
  return s;
}

}  // namespace glenostatics

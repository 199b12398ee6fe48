#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glenostatics/error.hpp"
#include "glenostatics/model.hpp"

namespace glenostatics {

/// Which form of the deltoid moment arm to use. Verbatim divides the
/// triangle-area expression by 2 l4, which is half the distance from O to
/// the tendon line; Corrected uses the full point-to-line distance.
enum class ArmMode { Verbatim, Corrected };

enum class Motion { Flexion, Extension, Abduction, Adduction, Rotation };

std::string_view to_string(Motion m);
std::string_view to_string(ArmMode m);
/// Throws Error{UnknownMotion}.
Motion parse_motion(std::string_view name);
/// Throws Error{InvalidArgument}.
ArmMode parse_arm_mode(std::string_view name);

// --- flexion / extension ----------------------------------------------------

/// Humeral insertion ON'' after abduction theta32 about y, then flexion
/// theta31 about z, starting from (0, 0, -l6).
Vec3 humeral_insertion(double theta31, double theta32, double l6);

struct DeltoidArm {
  double cosThetaM;  // angle AON''
  double sinThetaM;
  double l4;         // |AN''|
  double l7;         // moment arm
};

/// Throws Error{DegenerateTriangle} when A and N'' coincide (l4 <= 1e-12).
DeltoidArm deltoid_arm(const Vec3& attachment, double theta31, double theta32, double l6,
                       ArmMode mode);

/// Anterior deltoid, tension ft1 applied at g.oa.
double flexion_torque(double theta31, double theta32, double ft1, const ShoulderGeometry& g,
                      ArmMode mode = ArmMode::Verbatim);
/// Posterior deltoid, tension ft1 applied at g.op.
double extension_torque(double theta31, double theta32, double ft1, const ShoulderGeometry& g,
                        ArmMode mode = ArmMode::Verbatim);

// --- abduction / adduction --------------------------------------------------

struct AbductionTorque {
  double cosThetaBs;     // tendon bend at the acromion notch
  double supraspinatus;  // ft2 share of tau32b1
  double biceps;         // ft3 share of tau32b1
  double tau32b1;
  double tau32b2;  // deltoid middle
  double total;
};

/// Valid for |theta33| <= 60 deg, else Error{PoseOutOfEnvelope}.
AbductionTorque abduction_torque(double theta33, double ft2, double ft3, double ft4,
                                 const ShoulderGeometry& g);

/// tau32d = ft5 l10 cos(thetaK - theta32).
double adduction_torque(double theta32, double ft5, const ShoulderGeometry& g);

// --- rotation ---------------------------------------------------------------

struct RotationArm {
  double l14p;    // insertion projection after rotation
  double l15;
  double l16;     // offset of the wrap circle centre
  double l12;     // wrap circle radius
  double l17;     // |AT|
  double thetaN;  // angle ATO
  double lm0;     // moment arm
};

/// Requires theta32 in [0, 90] deg and |thetaR0 + theta33| < 90 deg
/// (Error{PoseOutOfEnvelope}); Error{DomainError} if the wrap circle offset
/// exceeds the head radius.
RotationArm rotation_arm(double theta32, double theta33, const ShoulderGeometry& g);

double rotation_torque(double theta32, double theta33, double ft6, const ShoulderGeometry& g);

// --- virtual-work cross-check ----------------------------------------------

/// |dL/dtheta| by central difference. h must lie in [1e-7, 1e-3] rad.
double moment_arm_virtual_work(const std::function<double(double)>& tendonLength, double theta,
                               double h);

/// Rotation tendon path length: straight run from the motor A to the wrap
/// circle, then an arc around it to the insertion Ts. Built from 3-D vector
/// geometry only, independent of the closed-form arm.
double rotation_tendon_length(double theta32, double theta33, const ShoulderGeometry& g);

/// Straight deltoid path |A - N''|.
double deltoid_tendon_length(const Vec3& attachment, double theta31, double theta32, double l6);

struct MomentArmPair {
  double closedFormArm;
  double vwArm;
  double ratio;  // vwArm / closedFormArm
};

MomentArmPair rotation_arm_pair(double theta32, double theta33, const ShoulderGeometry& g,
                                double h = 1e-6);

// --- surfaces ---------------------------------------------------------------

struct Axis {
  std::string name;
  std::vector<double> values;  // radians
};

/// Torque values over one or two joint angles, row-major in (axis1, axis2).
struct TorqueSurface {
  Motion motion = Motion::Flexion;
  Axis axis1;
  std::optional<Axis> axis2;
  std::vector<double> values;
  std::vector<double> tauB1;  // abduction only
  std::vector<double> tauB2;  // abduction only
  std::string muscle;
  double forceUsed = 0.0;

  std::size_t rows() const { return axis1.values.size(); }
  std::size_t cols() const { return axis2 ? axis2->values.size() : 1; }
  double at(std::size_t i, std::size_t j = 0) const { return values[i * cols() + j]; }

  struct Peak {
    double value;
    std::size_t i;
    std::size_t j;
  };
  /// First occurrence in row-major order wins ties.
  Peak max() const;
};

/// Error from one surface cell, tagged with its grid coordinates.
class CellError : public Error {
 public:
  CellError(ErrorKind kind, const std::string& what, std::size_t i, std::size_t j)
      : Error(kind, what), i_(i), j_(j) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// Axis layout per motion:
///   flexion / extension: theta31 x theta32
///   abduction:           theta33
///   adduction:           theta32
///   rotation:            theta32 x theta33
TorqueSurface torque_surface(Motion motion, const std::vector<double>& grid1,
                             const std::optional<std::vector<double>>& grid2,
                             const MuscleForces& forces, const ShoulderGeometry& g,
                             ArmMode mode = ArmMode::Verbatim);

bool is_two_dimensional(Motion m);

}  // namespace glenostatics

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "glenostatics/error.hpp"

namespace glenostatics {

using Vec3 = Eigen::Vector3d;

/// Glenohumeral joint angles in radians.
///
/// theta31: flexion (+) / extension (-)
/// theta32: abduction (+) / adduction (-)
/// theta33: external (+) / internal (-) rotation
struct JointPose {
  double theta31 = 0.0;
  double theta32 = 0.0;
  double theta33 = 0.0;
};

/// Lengths, radii and reference angles of the shoulder model.
///
/// Angles are radians, lengths meters. The humeral head radius appears twice
/// (`R` for the dislocation analysis, `l18` for the rotation arm) because the
/// two analyses are set up independently; they usually hold the same value.
struct ShoulderGeometry {
  // Dislocation model.
  double R = 0.0;    // humeral head radius
  double lt0 = 0.0;  // unstretched rotator-cuff tendon length |OS|
  double kt = 0.0;   // tendon stiffness, N/m

  // Biceps coupling across elbow and shoulder.
  double r1 = 0.0;  // humeral head moment radius
  double r2 = 0.0;  // elbow moment arm
  double l1 = 0.0;  // shoulder to elbow
  double l2 = 0.0;  // elbow to load point
  double thetaD = 0.0;  // scapula angle
  double thetaS = 0.0;  // socket contact half-arc

  // Deltoid (anterior / posterior) flexion-extension arm.
  Vec3 oa = Vec3::Zero();  // anterior deltoid attachment A
  Vec3 op = Vec3::Zero();  // posterior deltoid attachment
  double l5 = 0.0;         // |OA|
  double l6 = 0.0;         // |ON''|, humeral insertion distance

  // Abduction / adduction.
  double l8 = 0.0;   // |OS| in the abduction top view
  double l9 = 0.0;   // |OTs|
  double l10 = 0.0;  // triceps insertion distance
  double thetaK = 0.0;

  // Rotation.
  double l11 = 0.0;  // motor to head centre
  double l14 = 0.0;  // insertion projection |OT|
  double l18 = 0.0;  // humeral head radius
  double thetaR0 = 0.0;
};

/// Tendon tensions in newtons.
struct MuscleForces {
  double ft1 = 0.0;  // deltoid anterior / posterior
  double ft2 = 0.0;  // supraspinatus
  double ft3 = 0.0;  // biceps long head
  double ft4 = 0.0;  // deltoid middle
  double ft5 = 0.0;  // triceps long head
  double ft6 = 0.0;  // subscapularis / infraspinatus
};

enum class MotionGroup { FlexionExtension = 0, AdductionAbduction = 1, Rotation = 2 };

inline constexpr std::array<MotionGroup, 3> kMotionGroups = {
    MotionGroup::FlexionExtension, MotionGroup::AdductionAbduction, MotionGroup::Rotation};

std::string_view to_string(MotionGroup group);

struct AngleRange {
  double min = 0.0;
  double max = 0.0;

  double span() const { return max - min; }
  bool contains(double x) const { return x >= min && x <= max; }
};

/// Per-motion range of motion (radians), indexed by MotionGroup.
struct RomEnvelope {
  std::array<AngleRange, 3> ranges{};

  const AngleRange& operator[](MotionGroup g) const { return ranges[static_cast<int>(g)]; }
  AngleRange& operator[](MotionGroup g) { return ranges[static_cast<int>(g)]; }
};

struct Violation {
  ErrorKind kind;
  std::string field;
  std::string message;
};

/// Checks every geometry invariant and returns all violations found.
/// An empty result means the geometry is valid.
std::vector<Violation> validate_geometry(const ShoulderGeometry& g);

std::vector<Violation> validate_forces(const MuscleForces& f);
std::vector<Violation> validate_envelope(const RomEnvelope& env, std::string_view name);

/// Cross-checks that depend on both geometry and the robot envelope: the
/// rotation correction needs |thetaR0 + theta33| < 90 deg over the envelope.
std::vector<Violation> validate_geometry_in_envelope(const ShoulderGeometry& g,
                                                     const RomEnvelope& robot);

/// Returns `g` unchanged, or throws Error{ConfigError} listing every violation.
const ShoulderGeometry& checked(const ShoulderGeometry& g);

/// Throws Error{NonFinite} / Error{PoseOutOfEnvelope}.
void validate_pose(const JointPose& pose, const RomEnvelope& envelope);

std::string describe(const std::vector<Violation>& violations);

}  // namespace glenostatics

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "glenostatics/config.hpp"
#include "glenostatics/torque.hpp"
#include "glenostatics/units.hpp"
#include "support.hpp"

using namespace glenostatics;

namespace {

Vec3 mirror_y(const Vec3& v) { return {v.x(), -v.y(), v.z()}; }

std::vector<double> linspace_deg(double a, double b, std::size_t n) {
  return GridSpec{a, b, n}.radians();
}

}  // namespace

TEST(Motion, ParseAndPrint) {
  EXPECT_EQ(parse_motion("rotation"), Motion::Rotation);
  EXPECT_EQ(to_string(Motion::Abduction), "abduction");
  try {
    parse_motion("circumduction");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownMotion);
  }
  EXPECT_EQ(parse_arm_mode("corrected"), ArmMode::Corrected);
  EXPECT_THROW(parse_arm_mode("half"), Error);
}

TEST(Deltoid, PerpendicularOracle) {
  const Vec3 a(0.1, 0.0, 0.0);
  const auto arm = deltoid_arm(a, 0.0, 0.0, 0.3, ArmMode::Verbatim);
  EXPECT_NEAR(arm.l4, 0.3162277660168379, 1e-15);
  EXPECT_NEAR(arm.l7, 0.04743416490252569, 1e-15);
  EXPECT_NEAR(arm.sinThetaM, 1.0, 1e-15);
  ShoulderGeometry g = test_support::simple_geometry();
  EXPECT_NEAR(flexion_torque(0.0, 0.0, 700.0, g), 33.20391543176798, 1e-12);
}

TEST(Deltoid, InsertionStartsStraightDown) {
  const Vec3 n = humeral_insertion(0.0, 0.0, 0.3);
  EXPECT_NEAR(n.x(), 0.0, 1e-16);
  EXPECT_EQ(n.y(), 0.0);
  EXPECT_EQ(n.z(), -0.3);
  // The insertion formula keeps |ON''| = l6 on the theta31 = 0 and
  // theta32 = 90 deg planes only.
  EXPECT_NEAR(humeral_insertion(0.0, -0.7, 0.3).norm(), 0.3, 1e-15);
  EXPECT_NEAR(humeral_insertion(0.4, kHalfPi, 0.3).norm(), 0.3, 1e-15);
  EXPECT_GT(humeral_insertion(0.4, 0.0, 0.3).norm(), 0.3);
}

TEST(Deltoid, VerbatimIsHalfTheTriangleHeight) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = 0.12 * Vec3(u(rng), u(rng), u(rng));
    const double t31 = 1.2 * u(rng);
    const double t32 = 1.5 * u(rng);
    const auto v = deltoid_arm(a, t31, t32, 0.3, ArmMode::Verbatim);
    const auto c = deltoid_arm(a, t31, t32, 0.3, ArmMode::Corrected);
    EXPECT_EQ(c.l7, 2.0 * v.l7);
    const double height = a.norm() * 0.3 * c.sinThetaM / c.l4;
    EXPECT_NEAR(c.l7, height, 1e-14 * height + 1e-17);
  }
}

TEST(Deltoid, CorrectedIsPointToLineDistanceWhereInsertionHasLengthL6) {
  std::mt19937_64 rng(98);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = 0.12 * Vec3(u(rng), u(rng), u(rng));
    const double t31 = i % 2 ? 0.0 : 1.2 * u(rng);
    const double t32 = i % 2 ? 1.5 * u(rng) : kHalfPi;
    const Vec3 n = humeral_insertion(t31, t32, 0.3);
    const double dist = a.cross(n).norm() / (a - n).norm();
    const auto c = deltoid_arm(a, t31, t32, 0.3, ArmMode::Corrected);
    EXPECT_NEAR(c.l7, dist, 1e-12 * dist + 1e-15);
  }
}

TEST(Deltoid, DegenerateTriangle) {
  const Vec3 n = humeral_insertion(0.0, 0.3, 0.3);
  try {
    deltoid_arm(n, 0.0, 0.3, 0.3, ArmMode::Verbatim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateTriangle);
  }
}

TEST(Deltoid, ExtensionIsMirroredFlexion) {
  ShoulderGeometry g = test_support::reference().geometry;
  g.op = mirror_y(g.oa);
  for (double t31 : linspace_deg(-40, 65, 22)) {
    for (double t32 : linspace_deg(-32, 104, 18)) {
      EXPECT_EQ(extension_torque(t31, t32, 700.0, g), flexion_torque(-t31, t32, 700.0, g));
    }
  }
}

TEST(Abduction, Oracles) {
  const ShoulderGeometry g = test_support::simple_geometry();
  const auto t = abduction_torque(deg_to_rad(-60.0), 600, 500, 700, g);
  EXPECT_NEAR(t.cosThetaBs, 0.9041944301794651, 1e-15);
  EXPECT_NEAR(t.tau32b1, 29.83841619592235, 1e-12);
  EXPECT_NEAR(t.tau32b2, 18.18653347947321, 1e-12);
  EXPECT_NEAR(t.total, t.tau32b1 + t.tau32b2, 1e-12);
  EXPECT_NEAR(t.supraspinatus + t.biceps, t.tau32b1, 1e-12);
  const auto z = abduction_torque(0.0, 600, 500, 700, g);
  EXPECT_EQ(z.cosThetaBs, 1.0);
  EXPECT_NEAR(z.total, 54.0, 1e-12);
  EXPECT_THROW(abduction_torque(deg_to_rad(61.0), 600, 500, 700, g), Error);
}

TEST(Abduction, DeltoidMiddleContributesMostAtZero) {
  const auto& cfg = test_support::reference();
  const auto& f = cfg.forces;
  const auto t = abduction_torque(0.0, f.ft2, f.ft3, f.ft4, cfg.geometry);
  EXPECT_GT(t.tau32b2, t.supraspinatus);
  EXPECT_GT(t.tau32b2, t.biceps);
  const auto s = torque_surface(Motion::Abduction, cfg.sweeps.abduction.axis1.radians(),
                                std::nullopt, f, cfg.geometry);
  EXPECT_EQ(s.axis1.values[s.max().i], 0.0);
}

TEST(Abduction, EvenInTheta33) {
  const ShoulderGeometry g = test_support::simple_geometry();
  for (double d = 0.0; d <= 60.0; d += 5.0) {
    EXPECT_EQ(abduction_torque(deg_to_rad(d), 600, 500, 700, g).total,
              abduction_torque(deg_to_rad(-d), 600, 500, 700, g).total);
  }
}

TEST(Adduction, Oracle) {
  EXPECT_NEAR(adduction_torque(0.0, 700.0, test_support::simple_geometry()), 30.31088913245535,
              1e-12);
  EXPECT_NEAR(adduction_torque(deg_to_rad(30.0), 700.0, test_support::simple_geometry()), 35.0,
              1e-12);
}

TEST(Rotation, CorrectionRatio) {
  ShoulderGeometry g = test_support::simple_geometry();
  g.thetaR0 = deg_to_rad(60.0);
  g.l14 = 0.01;
  const auto a = rotation_arm(deg_to_rad(30.0), deg_to_rad(10.0), g);
  EXPECT_NEAR(a.l14p / g.l14, 0.6840402866513375, 1e-14);
}

TEST(Rotation, ArmEqualsHeadRadiusAtZeroAbduction) {
  const ShoulderGeometry& g = test_support::reference().geometry;
  for (double t33 : linspace_deg(-90, 40, 14)) {
    EXPECT_NEAR(rotation_arm(0.0, t33, g).lm0, g.l18, 1e-15);
  }
}

TEST(Rotation, NullAtRightAngleWhenInsertionOnRim) {
  for (double r0 : {0.0, 20.0, 40.0}) {
    ShoulderGeometry g = test_support::simple_geometry();
    g.thetaR0 = deg_to_rad(r0);
    g.l14 = g.l18;
    EXPECT_LE(std::abs(rotation_torque(kHalfPi, 0.0, 600.0, g)), 1e-9);
  }
}

TEST(Rotation, PoseLimits) {
  const ShoulderGeometry g = test_support::simple_geometry();
  EXPECT_THROW(rotation_arm(-0.1, 0.0, g), Error);
  EXPECT_THROW(rotation_arm(0.1, deg_to_rad(50.0), g), Error);
}

TEST(VirtualWork, StepRange) {
  const auto len = [](double t) { return 0.02 * t; };
  EXPECT_NEAR(moment_arm_virtual_work(len, 0.3, 1e-5), 0.02, 1e-12);
  EXPECT_THROW(moment_arm_virtual_work(len, 0.3, 1e-2), Error);
  EXPECT_THROW(moment_arm_virtual_work(len, 0.3, 1e-9), Error);
}

TEST(VirtualWork, DeltoidArmMatchesCorrectedForm) {
  // A pure planar flexion about z: the derivative of |A - N''| in theta31
  // equals the arm about z, which is the full distance when the tendon line
  // is perpendicular to the z axis.
  const Vec3 a(0.1, 0.0, 0.0);
  const double vw = moment_arm_virtual_work(
      [&](double t) { return deltoid_tendon_length(a, t, kHalfPi, 0.3); }, 0.3, 1e-6);
  const double corrected = deltoid_arm(a, 0.3, kHalfPi, 0.3, ArmMode::Corrected).l7;
  EXPECT_NEAR(vw, corrected, 1e-6 * corrected);
}

TEST(VirtualWork, RotationWithinFivePercent) {
  const ShoulderGeometry& g = test_support::reference().geometry;
  for (double t32 : linspace_deg(0, 60, 61)) {
    const auto p = rotation_arm_pair(t32, 0.0, g);
    EXPECT_NEAR(p.ratio, 1.0, 0.05) << "theta32 = " << rad_to_deg(t32);
  }
}

TEST(Surface, ShapesAndFirstOccurrencePeak) {
  const auto& cfg = test_support::reference();
  const auto s = torque_surface(Motion::Rotation, linspace_deg(0, 90, 4), linspace_deg(-10, 10, 3),
                                cfg.forces, cfg.geometry);
  EXPECT_EQ(s.rows(), 4u);
  EXPECT_EQ(s.cols(), 3u);
  EXPECT_EQ(s.values.size(), 12u);
  const auto p = s.max();
  EXPECT_EQ(p.i, 0u);
  EXPECT_EQ(p.j, 0u);
  EXPECT_THROW(torque_surface(Motion::Rotation, {0.0}, std::nullopt, cfg.forces, cfg.geometry),
               Error);
  EXPECT_THROW(torque_surface(Motion::Abduction, {0.0}, std::vector<double>{0.0}, cfg.forces,
                              cfg.geometry),
               Error);
}

TEST(Surface, CellErrorCarriesCoordinates) {
  const auto& cfg = test_support::reference();
  try {
    torque_surface(Motion::Rotation, linspace_deg(0, 100, 11), linspace_deg(-10, 10, 3),
                   cfg.forces, cfg.geometry);
    FAIL();
  } catch (const CellError& e) {
    EXPECT_EQ(e.i(), 10u);
    EXPECT_EQ(e.j(), 0u);
    EXPECT_EQ(e.kind(), ErrorKind::PoseOutOfEnvelope);
  }
}

TEST(SurfaceProperty, WholeEnvelopeHasNoDomainErrors) {
  const auto& cfg = test_support::reference();
  for (Motion m : {Motion::Flexion, Motion::Extension, Motion::Abduction, Motion::Adduction,
                   Motion::Rotation}) {
    for (ArmMode mode : {ArmMode::Verbatim, ArmMode::Corrected}) {
      const SurfaceSweep& sw = cfg.sweeps.surface(m);
      std::optional<std::vector<double>> g2;
      if (sw.axis2) g2 = sw.axis2->radians();
      TorqueSurface s;
      ASSERT_NO_THROW(s = torque_surface(m, sw.axis1.radians(), g2, cfg.forces, cfg.geometry,
                                         mode))
          << to_string(m);
      for (double v : s.values) {
        ASSERT_TRUE(std::isfinite(v));
        ASSERT_GE(v, 0.0);
      }
    }
  }
}

TEST(SurfaceProperty, LinearInTension) {
  const auto& cfg = test_support::reference();
  MuscleForces doubled = cfg.forces;
  for (double* f : {&doubled.ft1, &doubled.ft2, &doubled.ft3, &doubled.ft4, &doubled.ft5,
                    &doubled.ft6}) {
    *f *= 2.0;
  }
  for (Motion m : {Motion::Flexion, Motion::Abduction, Motion::Adduction, Motion::Rotation}) {
    const SurfaceSweep& sw = cfg.sweeps.surface(m);
    std::optional<std::vector<double>> g2;
    if (sw.axis2) g2 = sw.axis2->radians();
    const auto a = torque_surface(m, sw.axis1.radians(), g2, cfg.forces, cfg.geometry);
    const auto b = torque_surface(m, sw.axis1.radians(), g2, doubled, cfg.geometry);
    for (std::size_t k = 0; k < a.values.size(); ++k) EXPECT_EQ(b.values[k], 2.0 * a.values[k]);
  }
}

TEST(SurfaceProperty, RotationArmHomogeneousInLengths) {
  ShoulderGeometry g = test_support::reference().geometry;
  const double base = rotation_arm(deg_to_rad(37.0), deg_to_rad(-20.0), g).lm0;
  g.l11 *= 3.0;
  g.l14 *= 3.0;
  g.l18 *= 3.0;
  EXPECT_NEAR(rotation_arm(deg_to_rad(37.0), deg_to_rad(-20.0), g).lm0, 3.0 * base,
              1e-14 * base);
}

TEST(SurfaceProperty, DenseAbductionSweepIsFinite) {
  const auto& cfg = test_support::reference();
  const auto grid = linspace_deg(-60, 60, 100000);
  const auto s = torque_surface(Motion::Abduction, grid, std::nullopt, cfg.forces, cfg.geometry);
  double prev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ASSERT_TRUE(std::isfinite(s.values[i]));
    // Unimodal about theta33 = 0.
    if (i > 0 && grid[i] <= 0.0) {
      ASSERT_GE(s.values[i], prev);
    }
    if (i > 0 && grid[i - 1] >= 0.0) {
      ASSERT_LE(s.values[i], prev);
    }
    prev = s.values[i];
  }
}

TEST(Table, ReferenceMaximaWithinTwoPercent) {
  const auto& cfg = test_support::reference();
  const std::pair<Motion, double> rows[] = {{Motion::Flexion, 35.0},
                                            {Motion::Extension, 34.7},
                                            {Motion::Abduction, 54.0},
                                            {Motion::Adduction, 35.0},
                                            {Motion::Rotation, 18.0}};
  for (const auto& [m, target] : rows) {
    const SurfaceSweep& sw = cfg.sweeps.surface(m);
    std::optional<std::vector<double>> g2;
    if (sw.axis2) g2 = sw.axis2->radians();
    const double peak =
        torque_surface(m, sw.axis1.radians(), g2, cfg.forces, cfg.geometry).max().value;
    EXPECT_NEAR(peak, target, 0.02 * target) << to_string(m);
  }
}

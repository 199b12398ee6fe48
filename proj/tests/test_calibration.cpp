#include <gtest/gtest.h>

#include "glenostatics/calibration.hpp"
#include "glenostatics/stability.hpp"
#include "glenostatics/units.hpp"
#include "support.hpp"

using namespace glenostatics;

namespace {

const std::vector<Anchor>& all_anchors() {
  static const std::vector<Anchor> a = {
      parse_anchor("dislocation=400"), parse_anchor("flexion=35"),
      parse_anchor("extension=34.7"),  parse_anchor("abduction=54"),
      parse_anchor("adduction=35"),    parse_anchor("rotation=18")};
  return a;
}

}  // namespace

TEST(Anchor, Parsing) {
  const Anchor a = parse_anchor("dislocation@40=800");
  EXPECT_EQ(a.name, "dislocation");
  EXPECT_EQ(a.value, 800.0);
  ASSERT_TRUE(a.atDeg.has_value());
  EXPECT_EQ(*a.atDeg, 40.0);
  EXPECT_FALSE(parse_anchor("rotation=18").atDeg.has_value());
  EXPECT_THROW(parse_anchor("rotation"), Error);
  EXPECT_THROW(parse_anchor("rotation=abc"), Error);
  EXPECT_THROW(parse_anchor("rotation@10=18"), Error);
  EXPECT_THROW(parse_anchor("spin=18"), Error);
  EXPECT_THROW(parse_anchor("abduction=-1"), Error);
}

TEST(Calibrate, DislocationHitsAnchor) {
  RunConfig cfg = test_support::reference();
  cfg.geometry.kt = 1.0e5;
  const RunConfig out = calibrate(cfg, {parse_anchor("dislocation=400")}, ArmMode::Verbatim);
  EXPECT_NEAR(max_dislocation_force(deg_to_rad(30.0), out.geometry).feMax, 400.0, 1e-6);
  EXPECT_EQ(cfg.geometry.kt, 1.0e5);  // input untouched
  EXPECT_TRUE(out.notes.count("geometry.kt"));
}

TEST(Calibrate, AbductionClosedForm) {
  RunConfig cfg = test_support::reference();
  cfg.geometry.l9 = 0.02;
  const RunConfig out = calibrate(cfg, {parse_anchor("abduction=54")}, ArmMode::Verbatim);
  EXPECT_NEAR(out.geometry.l9, 54.0 / 1800.0, 1e-15);
}

TEST(Calibrate, AdductionClosedForm) {
  RunConfig cfg = test_support::reference();
  cfg.geometry.l10 = 0.01;
  const RunConfig out = calibrate(cfg, {parse_anchor("adduction=35")}, ArmMode::Verbatim);
  EXPECT_NEAR(out.geometry.l10, 0.05, 1e-15);
}

TEST(Calibrate, EveryAnchorReproducedAfterCalibration) {
  RunConfig cfg = test_support::reference();
  cfg.geometry.kt *= 0.7;
  cfg.geometry.oa *= 0.8;
  cfg.geometry.l5 = cfg.geometry.oa.norm();
  cfg.geometry.op *= 1.1;
  cfg.geometry.l9 = 0.02;
  cfg.geometry.l10 = 0.04;
  const RunConfig out = calibrate(cfg, all_anchors(), ArmMode::Verbatim);
  EXPECT_NEAR(max_dislocation_force(deg_to_rad(30.0), out.geometry).feMax, 400.0, 1e-6);
  EXPECT_NEAR(surface_peak(out, Motion::Flexion, ArmMode::Verbatim), 35.0, 1e-9);
  EXPECT_NEAR(surface_peak(out, Motion::Extension, ArmMode::Verbatim), 34.7, 1e-9);
  EXPECT_NEAR(surface_peak(out, Motion::Abduction, ArmMode::Verbatim), 54.0, 1e-9);
  EXPECT_NEAR(surface_peak(out, Motion::Adduction, ArmMode::Verbatim), 35.0, 1e-9);
  EXPECT_NEAR(surface_peak(out, Motion::Rotation, ArmMode::Verbatim), 18.0, 1e-9);
}

TEST(Calibrate, CorrectedModeHasItsOwnAttachment) {
  const RunConfig& ref = test_support::reference();
  const RunConfig out = calibrate(ref, {parse_anchor("flexion=35")}, ArmMode::Corrected);
  EXPECT_NEAR(surface_peak(out, Motion::Flexion, ArmMode::Corrected), 35.0, 1e-9);
  EXPECT_LT(out.geometry.l5, ref.geometry.l5);
}

TEST(Calibrate, IdempotentOnReference) {
  const RunConfig& ref = test_support::reference();
  const RunConfig out = calibrate(ref, all_anchors(), ArmMode::Verbatim);
  const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::abs(b); };
  EXPECT_TRUE(close(out.geometry.kt, ref.geometry.kt));
  EXPECT_TRUE(close(out.geometry.l5, ref.geometry.l5));
  EXPECT_TRUE(close(out.geometry.op.norm(), ref.geometry.op.norm()));
  EXPECT_TRUE(close(out.geometry.l9, ref.geometry.l9));
  EXPECT_TRUE(close(out.geometry.l10, ref.geometry.l10));
  EXPECT_TRUE(close(out.geometry.l18, ref.geometry.l18));
}

TEST(Calibrate, UnreachableDeltoidTarget) {
  EXPECT_THROW(calibrate(test_support::reference(), {parse_anchor("flexion=5000")},
                         ArmMode::Verbatim),
               Error);
}

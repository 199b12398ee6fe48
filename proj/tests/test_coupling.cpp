#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "glenostatics/coupling.hpp"
#include "support.hpp"

using namespace glenostatics;

namespace {

CouplingConfig base() {
  CouplingConfig c;
  c.r1 = 0.025;
  c.r2 = 0.05;
  c.l1 = 0.30;
  c.l2 = 0.25;
  c.thetaD = deg_to_rad(20.0);
  c.thetaS = deg_to_rad(10.0);
  return c;
}

double dh_dtheta_e(double e, const CouplingConfig& c) {
  const double f = coupled_elbow_angle(c.thetaD, e, c.r1, c.r2);
  return c.l1 * std::cos(e) + c.l2 * std::cos(f - e) * (c.r1 / c.r2 - 1.0);
}

}  // namespace

TEST(Coupling, ElbowAngleOracle) {
  EXPECT_NEAR(coupled_elbow_angle(deg_to_rad(20.0), deg_to_rad(40.0), 0.025, 0.05),
              0.5235987755982988, 1e-15);
  EXPECT_THROW(coupled_elbow_angle(0.1, 0.2, 0.025, 0.0), Error);
}

TEST(Coupling, HeightOracle) {
  EXPECT_NEAR(potential_height(deg_to_rad(40.0), base()), 0.1494242384892292, 1e-15);
}

TEST(Coupling, StabilityMargins) {
  const double tol = deg_to_rad(1.0);
  auto r = coupling_stability(deg_to_rad(195.0), 0.0, 0.0, tol);
  EXPECT_EQ(r.status, Status::Unstable);
  EXPECT_NEAR(r.margin, -15.0, 1e-12);
  r = coupling_stability(0.0, 0.0, 0.0, tol);
  EXPECT_EQ(r.status, Status::Stable);
  EXPECT_EQ(r.margin, 180.0);
  EXPECT_EQ(r.criterion, Criterion::CouplingCondition);
  EXPECT_EQ(coupling_stability(deg_to_rad(180.0), 0.0, 0.0, tol).status, Status::Marginal);
}

TEST(Fixtures, CouplingConfigsAndSums) {
  const auto j = nlohmann::json::parse(
      test_support::slurp(GLENOSTATICS_FIXTURES_DIR "/stability_fixtures.json"))["coupling"];
  const double tol = deg_to_rad(j["tolerance_deg"].get<double>());
  for (const auto& s : j["sums"]) {
    const auto r = coupling_stability(deg_to_rad(s["sum_deg"].get<double>()), 0.0, 0.0, tol);
    EXPECT_EQ(std::string(to_string(r.status)), s["status"].get<std::string>());
    EXPECT_NEAR(r.margin, s["margin_deg"].get<double>(), 1e-9);
  }
  int stable = 0;
  for (const auto& c : j["configs"]) {
    const auto r = coupling_stability(deg_to_rad(c["theta_d_deg"].get<double>()),
                                      deg_to_rad(c["theta_s_deg"].get<double>()),
                                      deg_to_rad(c["theta_e_deg"].get<double>()), tol);
    EXPECT_EQ(std::string(to_string(r.status)), c["status"].get<std::string>());
    stable += r.status == Status::Stable;
  }
  EXPECT_EQ(stable, 6);
}

TEST(Equilibrium, EqualRadiiIsLinearInThetaE) {
  // r1 = r2 makes thetaF - thetaE = thetaD, so H = l1 sin(thetaE) + const and
  // the minimum sits on the lower bracket end.
  CouplingConfig c = base();
  c.r2 = c.r1;
  EquilibriumOptions o;
  const auto r = equilibrium_pose(c, o);
  EXPECT_TRUE(r.atBoundary);
  EXPECT_EQ(r.thetaE, o.lo);
  o.requireInterior = true;
  try {
    equilibrium_pose(c, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoInteriorMinimum);
  }
}

TEST(Equilibrium, ReferenceIsInterior) {
  const auto r = equilibrium_pose(base(), {});
  EXPECT_FALSE(r.atBoundary);
  EXPECT_LE(std::abs(dh_dtheta_e(r.thetaE, base())), 1e-4 * base().l1);
  EXPECT_NEAR(r.thetaF, coupled_elbow_angle(base().thetaD, r.thetaE, 0.025, 0.05), 1e-15);
  EXPECT_NEAR(r.h, potential_height(r.thetaE, base()), 1e-15);
}

TEST(EquilibriumProperty, MatchesDenseGridOnRandomConfigs) {
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr std::size_t kGrid = 100000;
  int interior = 0;
  for (int trial = 0; trial < 100; ++trial) {
    CouplingConfig c;
    c.r1 = 0.01 + 0.04 * u(rng);
    c.r2 = 0.02 + 0.06 * u(rng);
    c.l1 = 0.2 + 0.2 * u(rng);
    c.l2 = 0.1 + 0.2 * u(rng);
    c.thetaD = deg_to_rad(60.0 * u(rng));
    c.thetaS = deg_to_rad(10.0);
    EquilibriumOptions o;
    const auto r = equilibrium_pose(c, o);

    const solver::Bracket b(o.lo, o.hi);
    double best_x = o.lo;
    double best_h = potential_height(o.lo, c);
    for (std::size_t i = 1; i < kGrid; ++i) {
      const double x = solver::grid_point(b, kGrid, i);
      const double h = potential_height(x, c);
      if (h < best_h) {
        best_h = h;
        best_x = x;
      }
    }
    const double step = b.width() / (kGrid - 1);
    EXPECT_NEAR(r.thetaE, best_x, std::max(o.solver.tol, step)) << "trial " << trial;
    EXPECT_LE(r.h, best_h + 1e-12);
    if (!r.atBoundary) {
      ++interior;
      EXPECT_LE(std::abs(dh_dtheta_e(r.thetaE, c)), 1e-4 * c.l1) << "trial " << trial;
    }
  }
  EXPECT_GT(interior, 0);
}

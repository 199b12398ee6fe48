#include "glenostatics/calibration.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "glenostatics/stability.hpp"
#include "glenostatics/units.hpp"

namespace glenostatics {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidArgument, "bad number '" + s + "' in " + what);
  }
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

TorqueSurface surface_for(const RunConfig& cfg, Motion m, ArmMode mode) {
  const SurfaceSweep& sw = cfg.sweeps.surface(m);
  std::optional<std::vector<double>> g2;
  if (sw.axis2) g2 = sw.axis2->radians();
  return torque_surface(m, sw.axis1.radians(), g2, cfg.forces, cfg.geometry, mode);
}

bool grid_contains_zero(const GridSpec& g) {
  for (double v : g.degrees()) {
    if (v == 0.0) return true;
  }
  return false;
}

// Bisection on the attachment scale. For |A| < l6 every cell's arm grows
// with the scale, so the surface peak is monotone on the bracket.
void calibrate_deltoid(RunConfig& cfg, Motion m, double target, ArmMode mode) {
  Vec3& attachment = m == Motion::Flexion ? cfg.geometry.oa : cfg.geometry.op;
  const Vec3 base = attachment;
  const double hi_scale = 0.999 * cfg.geometry.l6 / base.norm();
  const auto peak_at = [&](double s) {
    attachment = s * base;
    return surface_peak(cfg, m, mode);
  };
  double lo = 1e-6 * hi_scale;
  double hi = hi_scale;
  if (peak_at(hi) < target) {
    attachment = base;
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(m)) + " anchor " + fmt(target) +
                                                " N*m is out of reach for l6 = " +
                                                fmt(cfg.geometry.l6));
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (peak_at(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Keep the end whose peak is closer to the target.
  const double p_lo = peak_at(lo);
  const double p_hi = peak_at(hi);
  attachment = (std::abs(p_lo - target) < std::abs(p_hi - target) ? lo : hi) * base;
  if (m == Motion::Flexion) cfg.geometry.l5 = attachment.norm();
}

}  // namespace

Anchor parse_anchor(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, "anchor '" + text + "' must look like name=value");
  }
  Anchor a;
  std::string head = text.substr(0, eq);
  a.value = parse_number(text.substr(eq + 1), "anchor '" + text + "'");
  const auto at = head.find('@');
  if (at != std::string::npos) {
    a.atDeg = parse_number(head.substr(at + 1), "anchor '" + text + "'");
    head = head.substr(0, at);
  }
  a.name = head;
  if (a.name != "dislocation" && a.atDeg) {
    throw Error(ErrorKind::InvalidArgument, "only the dislocation anchor takes @angle");
  }
  if (a.name != "dislocation") parse_motion(a.name);
  if (!(a.value > 0.0)) throw Error(ErrorKind::InvalidArgument, "anchor value must be > 0");
  return a;
}

double surface_peak(const RunConfig& cfg, Motion m, ArmMode mode) {
  return surface_for(cfg, m, mode).max().value;
}

RunConfig calibrate(const RunConfig& input, const std::vector<Anchor>& anchors, ArmMode mode) {
  RunConfig cfg = input;
  ShoulderGeometry& g = cfg.geometry;
  for (const Anchor& a : anchors) {
    if (a.name == "dislocation") {
      const double th_deg = a.atDeg.value_or(30.0);
      if (g.kt == 0.0) g.kt = 1.0;
      // The equilibrium load is linear in kt.
      const double peak = max_dislocation_force(deg_to_rad(th_deg), g, cfg.tolerances.solver).feMax;
      g.kt *= a.value / peak;
      cfg.notes["geometry.kt"] = "calibrated: tendon stiffness scaled so the peak dislocation "
                                 "force at theta_h = " +
                                 fmt(th_deg) + " deg is " + fmt(a.value) + " N";
      continue;
    }
    const Motion m = parse_motion(a.name);
    switch (m) {
      case Motion::Flexion:
      case Motion::Extension:
        calibrate_deltoid(cfg, m, a.value, mode);
        cfg.notes[m == Motion::Flexion ? "geometry.oa" : "geometry.op"] =
            "calibrated: attachment scaled so the " + std::string(to_string(m)) +
            " surface peak is " + fmt(a.value) + " N*m (" + std::string(to_string(mode)) +
            " arm)";
        break;
      case Motion::Abduction: {
        if (!grid_contains_zero(cfg.sweeps.abduction.axis1)) {
          throw Error(ErrorKind::InvalidArgument, "abduction anchor needs theta33 = 0 in the grid");
        }
        const MuscleForces& f = cfg.forces;
        g.l9 = a.value / (f.ft2 + f.ft3 + f.ft4);
        cfg.notes["geometry.l9"] = "back-solved: abduction peak " + fmt(a.value) +
                          " N*m at theta33 = 0 over the summed tension " +
                          fmt(f.ft2 + f.ft3 + f.ft4) + " N";
        break;
      }
      case Motion::Adduction: {
        double best = -1.0;
        for (double t : cfg.sweeps.adduction.axis1.radians()) {
          best = std::max(best, std::cos(g.thetaK - t));
        }
        if (!(best > 0.0)) throw Error(ErrorKind::InvalidArgument, "adduction grid has no lever");
        g.l10 = a.value / (cfg.forces.ft5 * best);
        cfg.notes["geometry.l10"] = "back-solved: adduction peak " + fmt(a.value) + " N*m with " +
                           fmt(cfg.forces.ft5) + " N triceps tension";
        break;
      }
      case Motion::Rotation: {
        if (!grid_contains_zero(cfg.sweeps.rotation.axis1)) {
          throw Error(ErrorKind::InvalidArgument, "rotation anchor needs theta32 = 0 in the grid");
        }
        // lm0(theta32 = 0) = l18, and the arm is homogeneous in (l11, l14, l18).
        const double ratio = (a.value / cfg.forces.ft6) / g.l18;
        g.l18 *= ratio;
        g.l14 *= ratio;
        g.l11 *= ratio;
        cfg.notes["geometry.l18"] = "back-solved: rotation peak " + fmt(a.value) +
                                    " N*m at theta32 = 0 with " + fmt(cfg.forces.ft6) +
                                    " N tension; l11 and l14 scaled alongside";
        break;
      }
    }
  }
  const auto v = validate_config(cfg);
  if (!v.empty()) {
    throw Error(ErrorKind::ConfigError, "calibrated config is invalid:\n" + describe(v));
  }
  return cfg;
}

}  // namespace glenostatics

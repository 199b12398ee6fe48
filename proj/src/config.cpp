#include "glenostatics/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "glenostatics/units.hpp"

namespace glenostatics {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

std::vector<double> GridSpec::degrees() const {
  std::vector<double> out;
  if (points == 0) return out;
  out.reserve(points);
  if (points == 1) {
    out.push_back(startDeg);
    return out;
  }
  for (std::size_t i = 0; i < points; ++i) {
    if (i + 1 == points) {
      out.push_back(stopDeg);
    } else {
      out.push_back(startDeg + (stopDeg - startDeg) * (static_cast<double>(i) /
                                                       static_cast<double>(points - 1)));
    }
  }
  return out;
}

std::vector<double> GridSpec::radians() const {
  std::vector<double> out = degrees();
  for (double& v : out) v = deg_to_rad(v);
  return out;
}

const SurfaceSweep& Sweeps::surface(Motion m) const {
  switch (m) {
    case Motion::Flexion: return flexion;
    case Motion::Extension: return extension;
    case Motion::Abduction: return abduction;
    case Motion::Adduction: return adduction;
    case Motion::Rotation: return rotation;
  }
  return flexion;
}

SurfaceSweep& Sweeps::surface(Motion m) {
  return const_cast<SurfaceSweep&>(static_cast<const Sweeps&>(*this).surface(m));
}

bool OutputSpec::wants(const std::string& fmt) const {
  for (const auto& f : formats) {
    if (f == fmt) return true;
  }
  return false;
}

namespace {

// Reads one JSON object, recording every key it touches so that anything
// left over can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path, std::vector<Violation>& errs)
      : j_(j), path_(std::move(path)), errs_(errs) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  bool ok() const { return j_.is_object(); }

  bool has(const std::string& key) const { return ok() && j_.contains(key); }

  const json* get(const std::string& key, bool required = true) {
    seen_.insert(key);
    if (!ok()) return nullptr;
    auto it = j_.find(key);
    if (it == j_.end()) {
      if (required) fail(at(key), "missing required field");
      return nullptr;
    }
    return &*it;
  }

  void number(const std::string& key, double& out, bool required = true) {
    const json* v = get(key, required);
    if (!v) return;
    if (!v->is_number()) {
      fail(at(key), "expected a number");
      return;
    }
    out = v->get<double>();
  }

  void angle(const std::string& key, double& out, bool required = true) {
    double deg = 0.0;
    const json* v = get(key, required);
    if (!v) return;
    if (!v->is_number()) {
      fail(at(key), "expected a number (degrees)");
      return;
    }
    deg = v->get<double>();
    if (!std::isfinite(deg)) {
      fail(at(key), "angle is not finite");
      return;
    }
    out = deg_to_rad(deg);
  }

  void count(const std::string& key, std::size_t& out, bool required = true) {
    const json* v = get(key, required);
    if (!v) return;
    if (!v->is_number_integer() || v->get<long long>() < 0) {
      fail(at(key), "expected a non-negative integer");
      return;
    }
    out = v->get<std::size_t>();
  }

  void vec3(const std::string& key, Vec3& out) {
    const json* v = get(key);
    if (!v) return;
    if (!v->is_array() || v->size() != 3) {
      fail(at(key), "expected an array of 3 numbers");
      return;
    }
    for (int i = 0; i < 3; ++i) {
      if (!(*v)[i].is_number()) {
        fail(at(key), "expected an array of 3 numbers");
        return;
      }
      out[i] = (*v)[i].get<double>();
    }
  }

  void range(const std::string& key, AngleRange& out) {
    const json* v = get(key);
    if (!v) return;
    if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
      fail(at(key), "expected [min_deg, max_deg]");
      return;
    }
    out.min = deg_to_rad((*v)[0].get<double>());
    out.max = deg_to_rad((*v)[1].get<double>());
  }

  void grid(const std::string& key, GridSpec& out, bool required = true) {
    const json* v = get(key, required);
    if (!v) return;
    ObjectReader r(*v, at(key), errs_);
    r.number("start_deg", out.startDeg);
    r.number("stop_deg", out.stopDeg);
    r.count("points", out.points);
    r.finish();
  }

  std::string at(const std::string& key) const { return path_ + "." + key; }

  void finish() {
    if (!ok()) return;
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(at(it.key()), "unknown key");
    }
  }

  void fail(const std::string& field, const std::string& msg) {
    errs_.push_back({ErrorKind::ConfigError, field, msg});
  }

 private:
  const json& j_;
  std::string path_;
  std::vector<Violation>& errs_;
  std::set<std::string> seen_;
};

void read_geometry(const json& j, ShoulderGeometry& g, std::vector<Violation>& errs) {
  ObjectReader r(j, "geometry", errs);
  r.number("R", g.R);
  r.number("lt0", g.lt0);
  r.number("kt", g.kt);
  r.number("r1", g.r1);
  r.number("r2", g.r2);
  r.number("l1", g.l1);
  r.number("l2", g.l2);
  r.angle("theta_d_deg", g.thetaD);
  r.angle("theta_s_deg", g.thetaS);
  r.vec3("oa", g.oa);
  r.vec3("op", g.op);
  r.number("l5", g.l5);
  r.number("l6", g.l6);
  r.number("l8", g.l8);
  r.number("l9", g.l9);
  r.number("l10", g.l10);
  r.angle("theta_k_deg", g.thetaK);
  r.number("l11", g.l11);
  r.number("l14", g.l14);
  r.number("l18", g.l18);
  r.angle("theta_r0_deg", g.thetaR0);
  r.finish();
}

void read_forces(const json& j, MuscleForces& f, std::vector<Violation>& errs) {
  ObjectReader r(j, "forces", errs);
  r.number("deltoid_anterior_posterior", f.ft1);
  r.number("supraspinatus", f.ft2);
  r.number("biceps_long_head", f.ft3);
  r.number("deltoid_middle", f.ft4);
  r.number("triceps_long_head", f.ft5);
  r.number("subscapularis_infraspinatus", f.ft6);
  r.finish();
}

void read_envelope(const json& j, const std::string& path, RomEnvelope& env,
                   std::vector<Violation>& errs) {
  ObjectReader r(j, path, errs);
  for (MotionGroup g : kMotionGroups) r.range(std::string(to_string(g)), env[g]);
  r.finish();
}

void read_surface(ObjectReader& parent, const std::string& key, SurfaceSweep& s, bool twoAxes,
                  std::vector<Violation>& errs) {
  const json* v = parent.get(key, false);
  if (!v) return;
  ObjectReader r(*v, parent.at(key), errs);
  r.grid("axis1", s.axis1);
  if (twoAxes) {
    GridSpec g2 = s.axis2.value_or(GridSpec{});
    r.grid("axis2", g2);
    s.axis2 = g2;
  }
  r.finish();
}

void read_sweeps(const json& j, Sweeps& s, std::vector<Violation>& errs) {
  ObjectReader r(j, "sweeps", errs);
  if (const json* d = r.get("dislocation", false)) {
    ObjectReader dr(*d, "sweeps.dislocation", errs);
    if (const json* th = dr.get("theta_h_deg")) {
      if (!th->is_array()) {
        dr.fail("sweeps.dislocation.theta_h_deg", "expected an array of numbers");
      } else {
        s.thetaHDeg.clear();
        for (const auto& x : *th) {
          if (!x.is_number()) {
            dr.fail("sweeps.dislocation.theta_h_deg", "expected an array of numbers");
            break;
          }
          s.thetaHDeg.push_back(x.get<double>());
        }
      }
    }
    dr.count("theta_c_points", s.thetaCPoints);
    dr.finish();
  }
  for (Motion m : {Motion::Flexion, Motion::Extension, Motion::Abduction, Motion::Adduction,
                   Motion::Rotation}) {
    read_surface(r, std::string(to_string(m)), s.surface(m), is_two_dimensional(m), errs);
  }
  if (const json* e = r.get("equilibrium", false)) {
    ObjectReader er(*e, "sweeps.equilibrium", errs);
    er.number("lo_deg", s.equilibriumLoDeg);
    er.number("hi_deg", s.equilibriumHiDeg);
    er.finish();
  }
  if (const json* rc = r.get("rom_contact", false)) {
    ObjectReader rr(*rc, "sweeps.rom_contact", errs);
    rr.number("theta_fr_deg", s.romThetaFrDeg);
    rr.number("theta_fa_deg", s.romThetaFaDeg);
    rr.grid("theta0", s.romTheta0);
    rr.finish();
  }
  r.number("selflock_socket_half_deg", s.selfLockSocketHalfDeg, false);
  r.finish();
}

void read_tolerances(const json& j, Tolerances& t, std::vector<Violation>& errs) {
  ObjectReader r(j, "tolerances", errs);
  r.number("marginal_deg", t.marginalDeg, false);
  r.number("marginal_N", t.marginalN, false);
  r.number("solver_tol", t.solver.tol, false);
  r.count("grid_points", t.solver.gridPoints, false);
  std::size_t iters = static_cast<std::size_t>(t.solver.maxIter);
  r.count("max_iter", iters, false);
  t.solver.maxIter = static_cast<int>(iters);
  r.finish();
}

void read_output(const json& j, OutputSpec& o, std::vector<Violation>& errs) {
  ObjectReader r(j, "output", errs);
  if (const json* d = r.get("directory", false)) {
    if (d->is_string()) {
      o.directory = d->get<std::string>();
    } else {
      r.fail("output.directory", "expected a string");
    }
  }
  if (const json* f = r.get("formats", false)) {
    o.formats.clear();
    if (!f->is_array()) {
      r.fail("output.formats", "expected an array of strings");
    } else {
      for (const auto& x : *f) {
        if (!x.is_string() || (x != "csv" && x != "json")) {
          r.fail("output.formats", "formats must be \"csv\" or \"json\"");
          break;
        }
        o.formats.push_back(x.get<std::string>());
      }
    }
  }
  r.finish();
}

void check_grid(const GridSpec& g, const std::string& field, std::vector<Violation>& out) {
  if (!std::isfinite(g.startDeg) || !std::isfinite(g.stopDeg)) {
    out.push_back({ErrorKind::NonFinite, field, "grid bounds are not finite"});
  } else if (g.points == 0) {
    out.push_back({ErrorKind::ConfigError, field, "grid needs at least one point"});
  } else if (g.points >= 2 && !(g.startDeg < g.stopDeg)) {
    out.push_back({ErrorKind::ConfigError, field, "grid start must be < stop"});
  }
}

// Containment check in degrees with a little slack for decimal bounds.
void check_within(const GridSpec& g, double lo_deg, double hi_deg, const std::string& field,
                  std::vector<Violation>& out) {
  constexpr double kSlack = 1e-9;
  for (double v : g.degrees()) {
    if (v < lo_deg - kSlack || v > hi_deg + kSlack) {
      std::ostringstream os;
      os << "grid value " << v << " deg outside [" << lo_deg << ", " << hi_deg << "]";
      out.push_back({ErrorKind::PoseOutOfEnvelope, field, os.str()});
      return;
    }
  }
}

AngleRange deg_range(const RomEnvelope& env, MotionGroup g) {
  return {rad_to_deg(env[g].min), rad_to_deg(env[g].max)};
}

double tidy_deg(double rad) {
  // Drop the last-ulp noise of the degree/radian round trip.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", rad_to_deg(rad));
  return std::strtod(buf, nullptr);
}

ojson grid_json(const GridSpec& g) {
  return ojson{{"start_deg", g.startDeg}, {"stop_deg", g.stopDeg}, {"points", g.points}};
}

ojson envelope_json(const RomEnvelope& env) {
  ojson o = ojson::object();
  for (MotionGroup g : kMotionGroups) {
    o[std::string(to_string(g))] = {tidy_deg(env[g].min), tidy_deg(env[g].max)};
  }
  return o;
}

}  // namespace

std::vector<Violation> validate_config(const RunConfig& cfg) {
  std::vector<Violation> out = validate_geometry(cfg.geometry);
  auto append = [&out](std::vector<Violation> v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  append(validate_forces(cfg.forces));
  append(validate_envelope(cfg.robotRom, "rom.robot"));
  append(validate_envelope(cfg.humanRom, "rom.human"));
  append(validate_geometry_in_envelope(cfg.geometry, cfg.robotRom));

  const Sweeps& s = cfg.sweeps;
  for (double th : s.thetaHDeg) {
    if (!(th > 0.0 && th < 90.0)) {
      out.push_back({ErrorKind::AngleOutOfRange, "sweeps.dislocation.theta_h_deg",
                     "theta_h must lie in (0, 90) deg"});
      break;
    }
  }
  if (s.thetaCPoints < 2) {
    out.push_back({ErrorKind::ConfigError, "sweeps.dislocation.theta_c_points",
                   "need at least 2 points"});
  }

  const AngleRange fe = deg_range(cfg.robotRom, MotionGroup::FlexionExtension);
  const AngleRange aa = deg_range(cfg.robotRom, MotionGroup::AdductionAbduction);
  const AngleRange rot = deg_range(cfg.robotRom, MotionGroup::Rotation);
  for (Motion m : {Motion::Flexion, Motion::Extension, Motion::Abduction, Motion::Adduction,
                   Motion::Rotation}) {
    const SurfaceSweep& sw = s.surface(m);
    const std::string base = "sweeps." + std::string(to_string(m));
    check_grid(sw.axis1, base + ".axis1", out);
    if (sw.axis2) check_grid(*sw.axis2, base + ".axis2", out);
    switch (m) {
      case Motion::Flexion:
      case Motion::Extension:
        check_within(sw.axis1, fe.min, fe.max, base + ".axis1", out);
        check_within(*sw.axis2, aa.min, aa.max, base + ".axis2", out);
        break;
      case Motion::Abduction:
        check_within(sw.axis1, std::max(rot.min, -60.0), std::min(rot.max, 60.0),
                     base + ".axis1", out);
        break;
      case Motion::Adduction:
        check_within(sw.axis1, aa.min, aa.max, base + ".axis1", out);
        break;
      case Motion::Rotation:
        check_within(sw.axis1, std::max(aa.min, 0.0), std::min(aa.max, 90.0), base + ".axis1",
                     out);
        check_within(*sw.axis2, rot.min, rot.max, base + ".axis2", out);
        break;
    }
  }
  if (!(s.equilibriumLoDeg < s.equilibriumHiDeg)) {
    out.push_back({ErrorKind::ConfigError, "sweeps.equilibrium", "lo_deg must be < hi_deg"});
  }
  check_grid(s.romTheta0, "sweeps.rom_contact.theta0", out);
  if (!(s.selfLockSocketHalfDeg >= 0.0 && s.selfLockSocketHalfDeg < 90.0)) {
    out.push_back({ErrorKind::AngleOutOfRange, "sweeps.selflock_socket_half_deg",
                   "must lie in [0, 90) deg"});
  }

  const Tolerances& t = cfg.tolerances;
  if (!(t.marginalDeg >= 0.0) || !(t.marginalN >= 0.0)) {
    out.push_back({ErrorKind::ConfigError, "tolerances", "marginal bands must be >= 0"});
  }
  if (!(t.solver.tol > 0.0) || t.solver.gridPoints < 3 || t.solver.maxIter < 1) {
    out.push_back({ErrorKind::ConfigError, "tolerances",
                   "solver needs tol > 0, grid_points >= 3, max_iter >= 1"});
  }
  if (cfg.output.directory.empty()) {
    out.push_back({ErrorKind::ConfigError, "output.directory", "must be non-empty"});
  }
  return out;
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ConfigError, std::string("config is not valid JSON: ") + e.what());
  }

  RunConfig cfg;
  std::vector<Violation> errs;
  ObjectReader root(j, "config", errs);
  if (const json* v = root.get("geometry")) read_geometry(*v, cfg.geometry, errs);
  if (const json* v = root.get("forces")) read_forces(*v, cfg.forces, errs);
  if (const json* v = root.get("rom")) {
    ObjectReader r(*v, "rom", errs);
    if (const json* e = r.get("robot")) read_envelope(*e, "rom.robot", cfg.robotRom, errs);
    if (const json* e = r.get("human")) read_envelope(*e, "rom.human", cfg.humanRom, errs);
    r.finish();
  }
  if (const json* v = root.get("sweeps", false)) read_sweeps(*v, cfg.sweeps, errs);
  if (const json* v = root.get("tolerances", false)) read_tolerances(*v, cfg.tolerances, errs);
  if (const json* v = root.get("output", false)) read_output(*v, cfg.output, errs);
  if (const json* v = root.get("notes", false)) {
    if (!v->is_object()) {
      root.fail("config.notes", "expected an object of strings");
    } else {
      for (auto it = v->begin(); it != v->end(); ++it) {
        if (!it->is_string()) {
          root.fail("config.notes." + it.key(), "expected a string");
        } else {
          cfg.notes[it.key()] = it->get<std::string>();
        }
      }
    }
  }
  root.finish();

  if (errs.empty()) errs = validate_config(cfg);
  if (!errs.empty()) throw Error(ErrorKind::ConfigError, describe(errs));
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string dump_config(const RunConfig& cfg) {
  const ShoulderGeometry& g = cfg.geometry;
  ojson geo = {
      {"R", g.R},
      {"lt0", g.lt0},
      {"kt", g.kt},
      {"r1", g.r1},
      {"r2", g.r2},
      {"l1", g.l1},
      {"l2", g.l2},
      {"theta_d_deg", tidy_deg(g.thetaD)},
      {"theta_s_deg", tidy_deg(g.thetaS)},
      {"oa", {g.oa.x(), g.oa.y(), g.oa.z()}},
      {"op", {g.op.x(), g.op.y(), g.op.z()}},
      {"l5", g.l5},
      {"l6", g.l6},
      {"l8", g.l8},
      {"l9", g.l9},
      {"l10", g.l10},
      {"theta_k_deg", tidy_deg(g.thetaK)},
      {"l11", g.l11},
      {"l14", g.l14},
      {"l18", g.l18},
      {"theta_r0_deg", tidy_deg(g.thetaR0)},
  };
  const MuscleForces& f = cfg.forces;
  ojson forces = {
      {"deltoid_anterior_posterior", f.ft1}, {"supraspinatus", f.ft2},
      {"biceps_long_head", f.ft3},           {"deltoid_middle", f.ft4},
      {"triceps_long_head", f.ft5},          {"subscapularis_infraspinatus", f.ft6},
  };

  const Sweeps& s = cfg.sweeps;
  ojson sweeps = ojson::object();
  sweeps["dislocation"] = {{"theta_h_deg", s.thetaHDeg}, {"theta_c_points", s.thetaCPoints}};
  for (Motion m : {Motion::Flexion, Motion::Extension, Motion::Abduction, Motion::Adduction,
                   Motion::Rotation}) {
    const SurfaceSweep& sw = s.surface(m);
    ojson o = {{"axis1", grid_json(sw.axis1)}};
    if (sw.axis2) o["axis2"] = grid_json(*sw.axis2);
    sweeps[std::string(to_string(m))] = o;
  }
  sweeps["equilibrium"] = {{"lo_deg", s.equilibriumLoDeg}, {"hi_deg", s.equilibriumHiDeg}};
  sweeps["rom_contact"] = {{"theta_fr_deg", s.romThetaFrDeg},
                           {"theta_fa_deg", s.romThetaFaDeg},
                           {"theta0", grid_json(s.romTheta0)}};
  sweeps["selflock_socket_half_deg"] = s.selfLockSocketHalfDeg;

  const Tolerances& t = cfg.tolerances;
  ojson tol = {{"marginal_deg", t.marginalDeg},
               {"marginal_N", t.marginalN},
               {"solver_tol", t.solver.tol},
               {"grid_points", t.solver.gridPoints},
               {"max_iter", t.solver.maxIter}};

  ojson root = {
      {"geometry", geo},
      {"forces", forces},
      {"rom", {{"robot", envelope_json(cfg.robotRom)}, {"human", envelope_json(cfg.humanRom)}}},
      {"sweeps", sweeps},
      {"tolerances", tol},
      {"output", {{"directory", cfg.output.directory}, {"formats", cfg.output.formats}}},
  };
  if (!cfg.notes.empty()) {
    ojson notes = ojson::object();
    for (const auto& [k, v] : cfg.notes) notes[k] = v;
    root["notes"] = notes;
  }
  return root.dump(2) + "\n";
}

}  // namespace glenostatics

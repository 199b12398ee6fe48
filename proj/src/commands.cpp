#include "glenostatics/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "glenostatics/calibration.hpp"
#include "glenostatics/config.hpp"
#include "glenostatics/coupling.hpp"
#include "glenostatics/stability.hpp"
#include "glenostatics/units.hpp"

namespace glenostatics::cli {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << content;
}

// Loads and validates the config, then applies command-line overrides.
RunConfig prepare(const CommonOptions& opt) {
  RunConfig cfg = parse_config(read_file(opt.configPath));
  if (opt.outDir) {
    if (opt.outDir->empty()) throw UsageError("--out must be non-empty");
    cfg.output.directory = *opt.outDir;
  }
  if (opt.tol) {
    if (!(*opt.tol > 0.0)) throw UsageError("--tol must be > 0");
    cfg.tolerances.solver.tol = *opt.tol;
  }
  return cfg;
}

void override_points(GridSpec& g, const std::optional<std::size_t>& n) {
  if (n) g.points = *n;
}

std::string json_text(const ojson& j) { return j.dump(2) + "\n"; }

void emit_summary(const RunConfig& cfg, const ojson& summary, std::ostream& out) {
  if (cfg.output.wants("json")) write_file(fs::path(cfg.output.directory) / "summary.json",
                                           json_text(summary));
  out << json_text(summary);
}

ojson report_json(const StabilityReport& r) {
  const bool newtons = r.criterion == Criterion::DislocationPeak;
  return ojson{{"status", std::string(to_string(r.status))},
               {newtons ? "margin_N" : "margin_deg", r.margin},
               {"criterion", std::string(to_string(r.criterion))}};
}

// Runs `body`, mapping failures to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError || e.kind() == ErrorKind::UnknownMotion ||
        e.kind() == ErrorKind::InvalidArgument) {
      err << "config error:\n" << e.what() << "\n";
      return kUsage;
    }
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

std::string csv_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int run_dislocation(const CommonOptions& opt, const std::optional<std::vector<double>>& thetaHDeg,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig cfg = prepare(opt);
    std::vector<double> heights = thetaHDeg.value_or(cfg.sweeps.thetaHDeg);
    if (heights.empty()) throw UsageError("no theta_h values given (use --theta-h 20,30,...)");
    for (double h : heights) {
      if (!(h > 0.0 && h < 90.0)) throw UsageError("theta_h must lie in (0, 90) deg");
    }
    std::size_t points = opt.grid.value_or(cfg.sweeps.thetaCPoints);
    if (points < 2) throw UsageError("dislocation sweep needs --grid >= 2");

    std::ostringstream csv;
    csv << "theta_h_deg,theta_c_deg,f_e_N\n";
    ojson curves = ojson::array();
    for (double h_deg : heights) {
      const double h = deg_to_rad(h_deg);
      const GridSpec sweep{0.0, h_deg, points};
      for (double c_deg : sweep.degrees()) {
        const double fe = dislocation_force(std::min(deg_to_rad(c_deg), h), h, cfg.geometry);
        csv << csv_number(h_deg) << ',' << csv_number(c_deg) << ',' << csv_number(fe) << '\n';
      }
      const PeakForce p = max_dislocation_force(h, cfg.geometry, cfg.tolerances.solver);
      curves.push_back({{"theta_h_deg", h_deg},
                        {"fe_max_N", p.feMax},
                        {"theta_c_star_deg", rad_to_deg(p.thetaCStar)}});
    }
    if (cfg.output.wants("csv")) write_file(fs::path(cfg.output.directory) / "dislocation.csv",
                                            csv.str());
    emit_summary(cfg, ojson{{"command", "dislocation"}, {"curves", curves}}, out);
    return kOk;
  });
}

int run_torque(const CommonOptions& opt, const std::string& motionName, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Motion motion = parse_motion(motionName);
    RunConfig cfg = prepare(opt);
    SurfaceSweep sw = cfg.sweeps.surface(motion);
    override_points(sw.axis1, opt.grid);
    if (sw.axis2) override_points(*sw.axis2, opt.grid);
    if (sw.axis1.points == 0 || (sw.axis2 && sw.axis2->points == 0)) {
      throw UsageError("--grid must be >= 1");
    }

    std::optional<std::vector<double>> g2;
    if (sw.axis2) g2 = sw.axis2->radians();
    const TorqueSurface s =
        torque_surface(motion, sw.axis1.radians(), g2, cfg.forces, cfg.geometry, opt.mode);

    const std::vector<double> d1 = sw.axis1.degrees();
    const std::vector<double> d2 = sw.axis2 ? sw.axis2->degrees() : std::vector<double>{};
    std::ostringstream csv;
    csv << s.axis1.name << "_deg";
    if (s.axis2) csv << ',' << s.axis2->name << "_deg";
    csv << ",torque_Nm";
    if (motion == Motion::Abduction) csv << ",tau_b1_Nm,tau_b2_Nm";
    csv << '\n';
    for (std::size_t i = 0; i < s.rows(); ++i) {
      for (std::size_t j = 0; j < s.cols(); ++j) {
        csv << csv_number(d1[i]);
        if (s.axis2) csv << ',' << csv_number(d2[j]);
        csv << ',' << csv_number(s.at(i, j));
        if (motion == Motion::Abduction) {
          csv << ',' << csv_number(s.tauB1[i]) << ',' << csv_number(s.tauB2[i]);
        }
        csv << '\n';
      }
    }
    if (cfg.output.wants("csv")) {
      write_file(fs::path(cfg.output.directory) / ("torque_" + motionName + ".csv"), csv.str());
    }

    const TorqueSurface::Peak p = s.max();
    ojson argmax = {{s.axis1.name + "_deg", d1[p.i]}};
    if (s.axis2) argmax[s.axis2->name + "_deg"] = d2[p.j];
    emit_summary(cfg,
                 ojson{{"command", "torque"},
                       {"motion", motionName},
                       {"mode", std::string(to_string(opt.mode))},
                       {"muscle", s.muscle},
                       {"force_N", s.forceUsed},
                       {"rows", s.rows()},
                       {"cols", s.cols()},
                       {"max_torque_Nm", p.value},
                       {"argmax", argmax}},
                 out);
    return kOk;
  });
}

int run_stability(const CommonOptions& opt, const StabilityArgs& args, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    RunConfig cfg = prepare(opt);
    const double tol_deg = cfg.tolerances.marginalDeg;
    const double tol = deg_to_rad(tol_deg);
    ojson reports = ojson::array();

    if (args.kind == "selflock") {
      if (args.thetaDDeg.empty()) throw UsageError("selflock needs --theta-d values");
      const double half = args.socketHalfDeg.value_or(cfg.sweeps.selfLockSocketHalfDeg);
      for (double d : args.thetaDDeg) {
        ojson rec = {{"theta_d_deg", d}, {"socket_half_deg", half}};
        rec.update(report_json(self_lock_status(deg_to_rad(d), deg_to_rad(half), tol)));
        reports.push_back(rec);
      }
    } else if (args.kind == "coupling") {
      const double theta_s = args.thetaSDeg ? deg_to_rad(*args.thetaSDeg) : cfg.geometry.thetaS;
      std::vector<double> ds = args.thetaDDeg;
      if (ds.empty() && args.cases.empty() && args.sumsDeg.empty()) {
        ds.push_back(rad_to_deg(cfg.geometry.thetaD));
      }
      for (double d_deg : ds) {
        double e = 0.0;
        bool from_equilibrium = false;
        if (args.thetaEDeg) {
          e = deg_to_rad(*args.thetaEDeg);
        } else {
          CouplingConfig cc = CouplingConfig::from(cfg.geometry);
          cc.thetaD = deg_to_rad(d_deg);
          EquilibriumOptions eo;
          eo.lo = deg_to_rad(cfg.sweeps.equilibriumLoDeg);
          eo.hi = deg_to_rad(cfg.sweeps.equilibriumHiDeg);
          eo.solver = cfg.tolerances.solver;
          e = equilibrium_pose(cc, eo).thetaE;
          from_equilibrium = true;
        }
        ojson rec = {{"theta_d_deg", d_deg},
                     {"theta_s_deg", rad_to_deg(theta_s)},
                     {"theta_e_deg", rad_to_deg(e)},
                     {"theta_e_source", from_equilibrium ? "equilibrium" : "given"}};
        rec.update(report_json(coupling_stability(deg_to_rad(d_deg), theta_s, e, tol)));
        reports.push_back(rec);
      }
      for (const auto& c : args.cases) {
        ojson rec = {{"theta_d_deg", c[0]}, {"theta_s_deg", c[1]}, {"theta_e_deg", c[2]},
                     {"theta_e_source", "given"}};
        rec.update(report_json(
            coupling_stability(deg_to_rad(c[0]), deg_to_rad(c[1]), deg_to_rad(c[2]), tol)));
        reports.push_back(rec);
      }
      for (double sum : args.sumsDeg) {
        ojson rec = {{"angle_sum_deg", sum}};
        rec.update(report_json(coupling_stability(deg_to_rad(sum), 0.0, 0.0, tol)));
        reports.push_back(rec);
      }
    } else {
      throw UsageError("--kind must be selflock or coupling");
    }
    emit_summary(cfg,
                 ojson{{"command", "stability"},
                       {"kind", args.kind},
                       {"tolerance_deg", tol_deg},
                       {"reports", reports}},
                 out);
    return kOk;
  });
}

int run_equilibrium(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig cfg = prepare(opt);
    EquilibriumOptions eo;
    eo.lo = deg_to_rad(cfg.sweeps.equilibriumLoDeg);
    eo.hi = deg_to_rad(cfg.sweeps.equilibriumHiDeg);
    eo.solver = cfg.tolerances.solver;
    if (opt.grid) {
      if (*opt.grid < 3) throw UsageError("equilibrium needs --grid >= 3");
      eo.solver.gridPoints = *opt.grid;
    }
    eo.marginalTol = deg_to_rad(cfg.tolerances.marginalDeg);
    const EquilibriumResult r = equilibrium_pose(CouplingConfig::from(cfg.geometry), eo);
    emit_summary(cfg,
                 ojson{{"command", "equilibrium"},
                       {"theta_d_deg", rad_to_deg(cfg.geometry.thetaD)},
                       {"theta_e_deg", rad_to_deg(r.thetaE)},
                       {"theta_f_deg", rad_to_deg(r.thetaF)},
                       {"h_m", r.h},
                       {"at_boundary", r.atBoundary},
                       {"stability", report_json(r.stability)}},
                 out);
    return kOk;
  });
}

int run_rom(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig cfg = prepare(opt);
    const auto coverage = rom_coverage(cfg.robotRom, cfg.humanRom);

    std::ostringstream csv;
    csv << "motion,robot_min_deg,robot_max_deg,robot_span_deg,human_min_deg,human_max_deg,"
           "human_span_deg,coverage_pct\n";
    ojson rows = ojson::array();
    char line[160];
    out << "motion                robot span   human span   coverage\n";
    for (MotionGroup g : kMotionGroups) {
      const AngleRange& r = cfg.robotRom[g];
      const AngleRange& h = cfg.humanRom[g];
      const double pct = coverage[static_cast<int>(g)];
      csv << to_string(g) << ',' << csv_number(rad_to_deg(r.min)) << ','
          << csv_number(rad_to_deg(r.max)) << ',' << csv_number(rad_to_deg(r.span())) << ','
          << csv_number(rad_to_deg(h.min)) << ',' << csv_number(rad_to_deg(h.max)) << ','
          << csv_number(rad_to_deg(h.span())) << ',' << csv_number(pct) << '\n';
      std::snprintf(line, sizeof line, "%-20s %9.2f deg %9.2f deg %9.2f %%\n",
                    std::string(to_string(g)).c_str(), rad_to_deg(r.span()),
                    rad_to_deg(h.span()), pct);
      out << line;
      rows.push_back({{"motion", std::string(to_string(g))},
                      {"robot_span_deg", rad_to_deg(r.span())},
                      {"human_span_deg", rad_to_deg(h.span())},
                      {"coverage_pct", pct}});
    }

    GridSpec theta0 = cfg.sweeps.romTheta0;
    override_points(theta0, opt.grid);
    std::ostringstream contact;
    contact << "theta0_deg,theta_r33_deg,theta_r32_deg\n";
    const double fr = deg_to_rad(cfg.sweeps.romThetaFrDeg);
    const double fa = deg_to_rad(cfg.sweeps.romThetaFaDeg);
    for (double t_deg : theta0.degrees()) {
      const double t = deg_to_rad(t_deg);
      const RomFromContact r = rom_from_contact(fr, t, fa, t);
      contact << csv_number(t_deg) << ',' << csv_number(rad_to_deg(r.thetaR33)) << ','
              << csv_number(rad_to_deg(r.thetaR32)) << '\n';
    }
    if (cfg.output.wants("csv")) {
      write_file(fs::path(cfg.output.directory) / "rom.csv", csv.str());
      write_file(fs::path(cfg.output.directory) / "rom_contact.csv", contact.str());
    }
    const ojson summary = {{"command", "rom"}, {"coverage", rows}};
    if (cfg.output.wants("json")) {
      write_file(fs::path(cfg.output.directory) / "summary.json", json_text(summary));
    }
    return kOk;
  });
}

int run_calibrate(const CommonOptions& opt, const std::vector<std::string>& anchorTexts,
                  const std::optional<std::string>& writePath, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const std::string original = read_file(opt.configPath);
    RunConfig cfg = prepare(opt);
    std::vector<Anchor> anchors;
    for (const auto& t : anchorTexts) anchors.push_back(parse_anchor(t));

    const fs::path target =
        writePath ? fs::path(*writePath) : fs::path(cfg.output.directory) / "config.json";
    if (anchors.empty()) {
      write_file(target, original);
      out << "no anchors; config copied unchanged to " << target.string() << "\n";
      return kOk;
    }
    RunConfig calibrated = calibrate(cfg, anchors, opt.mode);
    // The output directory override is a run-time choice, not part of the file.
    calibrated.output.directory = parse_config(original).output.directory;
    write_file(target, dump_config(calibrated));

    ojson achieved = ojson::object();
    for (const Anchor& a : anchors) {
      if (a.name == "dislocation") {
        achieved["dislocation"] =
            max_dislocation_force(deg_to_rad(a.atDeg.value_or(30.0)), calibrated.geometry,
                                  calibrated.tolerances.solver)
                .feMax;
      } else {
        achieved[a.name] = surface_peak(calibrated, parse_motion(a.name), opt.mode);
      }
    }
    out << json_text(ojson{{"command", "calibrate"},
                           {"written", target.string()},
                           {"achieved", achieved}});
    return kOk;
  });
}

}  // namespace glenostatics::cli

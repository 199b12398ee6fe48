#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glenostatics/commands.hpp"

namespace gc = glenostatics::cli;

namespace {

void add_common(CLI::App* app, gc::CommonOptions& opt, std::string& mode) {
  app->add_option("--config", opt.configPath, "config JSON file")->required();
  app->add_option("--out", opt.outDir, "output directory");
  app->add_option("--grid", opt.grid, "grid points per axis")->check(CLI::PositiveNumber);
  app->add_option("--tol", opt.tol, "solver tolerance");
  app->add_option("--mode", mode, "deltoid arm variant")
      ->check(CLI::IsMember({"verbatim", "corrected"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statics and stability of a tendon-driven ball-and-socket shoulder"};
  app.require_subcommand(1);

  gc::CommonOptions opt;
  std::string mode = "verbatim";

  auto* dis = app.add_subcommand("dislocation", "dislocation force curves");
  add_common(dis, opt, mode);
  std::vector<double> theta_h;
  auto* theta_h_opt =
      dis->add_option("--theta-h", theta_h, "contact half-arcs in degrees")->delimiter(',');
  bool empty_theta_h = false;
  dis->add_flag("--no-theta-h", empty_theta_h, "run with an empty theta_h list");

  auto* tor = app.add_subcommand("torque", "torque-angle surface");
  add_common(tor, opt, mode);
  std::string motion;
  tor->add_option("--motion", motion, "flexion|extension|abduction|adduction|rotation")
      ->required();

  auto* stab = app.add_subcommand("stability", "self-lock or coupling classification");
  add_common(stab, opt, mode);
  gc::StabilityArgs sargs;
  stab->add_option("--kind", sargs.kind, "selflock|coupling")->required();
  stab->add_option("--theta-d", sargs.thetaDDeg, "tendon angles in degrees")->delimiter(',');
  stab->add_option("--socket-half", sargs.socketHalfDeg, "socket half-arc (selflock), degrees");
  stab->add_option("--theta-s", sargs.thetaSDeg, "socket angle (coupling), degrees");
  stab->add_option("--theta-e", sargs.thetaEDeg, "elbow angle (coupling), degrees");
  stab->add_option("--sum", sargs.sumsDeg, "angle sums thetaD - thetaS + thetaE, degrees")
      ->delimiter(',');

  auto* eq = app.add_subcommand("equilibrium", "coupled equilibrium pose");
  add_common(eq, opt, mode);

  auto* rom = app.add_subcommand("rom", "range-of-motion coverage");
  add_common(rom, opt, mode);

  auto* cal = app.add_subcommand("calibrate", "back-solve parameters from anchors");
  add_common(cal, opt, mode);
  std::vector<std::string> anchors;
  std::optional<std::string> write_path;
  cal->add_option("--anchor", anchors, "name[@deg]=value, repeatable");
  cal->add_option("--write", write_path, "destination (default <out>/config.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gc::kUsage;
  }

  opt.mode = glenostatics::parse_arm_mode(mode);
  auto& out = std::cout;
  auto& err = std::cerr;

  if (*dis) {
    std::optional<std::vector<double>> hs;
    if (empty_theta_h) {
      hs = std::vector<double>{};
    } else if (theta_h_opt->count() > 0) {
      hs = theta_h;
    }
    return gc::run_dislocation(opt, hs, out, err);
  }
  if (*tor) return gc::run_torque(opt, motion, out, err);
  if (*stab) return gc::run_stability(opt, sargs, out, err);
  if (*eq) return gc::run_equilibrium(opt, out, err);
  if (*rom) return gc::run_rom(opt, out, err);
  if (*cal) return gc::run_calibrate(opt, anchors, write_path, out, err);
  return gc::kUsage;
}

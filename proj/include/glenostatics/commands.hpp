#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "glenostatics/torque.hpp"

namespace glenostatics::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3 };

/// Flags shared by every subcommand.
struct CommonOptions {
  std::string configPath;
  std::optional<std::string> outDir;
  std::optional<std::size_t> grid;
  std::optional<double> tol;
  ArmMode mode = ArmMode::Verbatim;
};

struct StabilityArgs {
  std::string kind;                        // selflock | coupling
  std::vector<double> thetaDDeg;
  std::optional<double> socketHalfDeg;     // selflock
  std::optional<double> thetaSDeg;         // coupling
  std::optional<double> thetaEDeg;         // coupling; default: equilibrium pose
  std::vector<std::array<double, 3>> cases;  // coupling (thetaD, thetaS, thetaE)
  std::vector<double> sumsDeg;               // coupling, thetaD - thetaS + thetaE
};

// Each command writes its files under the output directory, prints a short
// report on `out`, and returns an ExitCode. Diagnostics go to `err`.

int run_dislocation(const CommonOptions& opt, const std::optional<std::vector<double>>& thetaHDeg,
                    std::ostream& out, std::ostream& err);
int run_torque(const CommonOptions& opt, const std::string& motion, std::ostream& out,
               std::ostream& err);
int run_stability(const CommonOptions& opt, const StabilityArgs& args, std::ostream& out,
                  std::ostream& err);
int run_equilibrium(const CommonOptions& opt, std::ostream& out, std::ostream& err);
int run_rom(const CommonOptions& opt, std::ostream& out, std::ostream& err);
int run_calibrate(const CommonOptions& opt, const std::vector<std::string>& anchors,
                  const std::optional<std::string>& writePath, std::ostream& out,
                  std::ostream& err);

/// Fixed CSV number format: 10 significant digits, no negative zero.
std::string csv_number(double v);

}  // namespace glenostatics::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cdk::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kFailures = 1,
  kUsage = 2,
  kChamber = 3,
  kCollision = 4,
};

/// Defaults for every command, in one place.
struct Defaults {
  static constexpr unsigned degree = 6;
  static constexpr double tol = 1e-10;
  static constexpr double margin = 1e-6;
  static constexpr double holonomy_tol = 1e-8;
  static constexpr double dyson_tol = 1e-6;
  static constexpr double drift_tol = 1e-8;
  static constexpr double duration = 10.0;
  static constexpr double dt = 1e-4;
  static constexpr unsigned long long seed = 1;
};

/// Runs `cdk <args...>`; args exclude the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdk::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geospin/manifold.hpp"

namespace geospin::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // computational or load failure, or a failed check
  kExitUsage = 2,
};

/// Runs one invocation; `args` excludes the program name. Primary output
/// goes to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  std::string group;
  std::string manifold;
  double tolerance = 0.0;
  /// Worst residual, scaled the same way as the tolerance.
  double observed = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  double hbar = 1.0;
  std::vector<CheckResult> checks;
  bool pass = false;

  std::string to_json() const;
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  double hbar = 1.0;
  /// Check groups to run; empty means all.
  std::set<std::string> only;
  /// Extra manifold checked alongside the built-in zoo.
  std::optional<MetricField> extra;
  unsigned jobs = 1;
};

/// trace, christoffel, geodesic, logdet, mode, spectrum, curvature,
/// corollary, rk4
const std::vector<std::string>& check_groups();

VerificationReport run_verify(const VerifyConfig& config);

}  // namespace geospin::cli

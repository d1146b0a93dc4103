#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "theta/asymptotics.hpp"

namespace theta::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the default working precision.
inline constexpr const char* kPrecisionEnv = "THETA_PRECISION";

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Invariants checked by `verify`. Published-table discrepancies are not
/// checks; they go to the report.
std::vector<CheckResult> run_invariant_suite(std::uint64_t s_max, const asymptotics::SeriesConfig& cfg);

/// Entry point behind the `theta` binary; `args` excludes the program name.
///
///   theta exact S [--identity-check]
///   theta approx S [--precision P] [--tolerance T] [--max-terms N] [--digits D]
///   theta table [--max N] [--format plain|csv|json] [--out PATH] [...]
///   theta verify [--s-max N] [--tolerance T] [--format text|json] [...]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta::cli

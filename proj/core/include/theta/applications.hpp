#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "theta/asymptotics.hpp"
#include "theta/bignat.hpp"
#include "theta/real.hpp"

namespace theta::applications {

/// Published figures that the report compares against exact computation.
/// They are claims, not ground truth.
namespace published {
/// Θ(15) as printed in the published distribution table.
inline constexpr std::string_view kTheta15 = "1.604966503e11";
/// Θ(1)…Θ(14) as printed (the last entry rounded to 10 significant digits).
inline constexpr std::string_view kThetaExact[] = {
    "0",      "1",      "3",       "10",       "41",        "206",       "1237",
    "8660",   "69281",  "623530",  "6235301",  "68588312",  "823059745", "1.069977669e10"};
}  // namespace published

/// One row of the distribution table.
///
/// The approximant column follows the published convention: the row for s
/// carries the asymptotic formula evaluated at s − 1, the value it predicts
/// for Θ(s). It is absent for s = 1.
struct TableRow {
  std::uint64_t s;
  BigNat exact;                    ///< Θ(s)
  std::optional<Real> approx;      ///< stirling_approx(s − 1)
  std::optional<Real> rel_error;   ///< |approx − exact| / exact
  std::string note;                ///< non-empty where a published entry disagrees
};

/// Rows s = 1..s_max, 2 ≤ s_max ≤ 1000.
std::vector<TableRow> distribution_table(std::uint64_t s_max, const asymptotics::SeriesConfig& cfg);

/// s rows of s distinguishable seats; row j must seat its own j people.
struct SeatingInstance {
  std::uint64_t s;
  std::vector<std::uint64_t> group_sizes;  ///< 1, 2, …, s

  static SeatingInstance make(std::uint64_t s);
  std::uint64_t total_people() const;  ///< s(s+1)/2
};

/// N(s) = ∏_{j=1}^{s} s!/(s−j)!: each row's group is placed injectively into
/// that row's seats, rows independently.
BigNat seating_count_formula(std::uint64_t s);

/// Largest s accepted by seating_bruteforce.
inline constexpr std::uint64_t kSeatingBruteforceMax = 4;

/// Counts assignments by enumerating, person by person, every seat in the
/// s×s hall and keeping only injective assignments that respect the row
/// rules. Independent of the product formula. 1 ≤ s ≤ 4.
BigNat seating_bruteforce(std::uint64_t s);

struct ReportEntry {
  std::string key;
  std::string value;
  std::string provenance;
};

/// Flat, ordered list of findings: the Θ(15) table discrepancy, the ratio
/// study against both candidate constants, and the seating counts against Θ.
struct DiscrepancyReport {
  std::vector<ReportEntry> entries;

  /// nullptr when absent.
  const ReportEntry* find(std::string_view key) const;
};

/// s_max ≥ 15.
DiscrepancyReport discrepancy_report(std::uint64_t s_max, const asymptotics::SeriesConfig& cfg,
                                     unsigned display_digits = 12);

/// First s0 ≥ 2 such that r is strictly decreasing on [s0, s_max].
std::uint64_t ratio_monotone_start(const std::vector<asymptotics::RatioPoint>& ratios);

}  // namespace theta::applications

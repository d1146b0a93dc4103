#include "theta/applications.hpp"

#include <functional>

#include "theta/errors.hpp"
#include "theta/exact.hpp"

namespace theta::applications {

using asymptotics::SeriesConfig;

namespace {

constexpr std::uint64_t kTableMax = 1000;

std::string relative_gap(const Real& value, const Real& reference, unsigned digits) {
  return (abs(value - reference) / reference).to_string(digits);
}

}  // namespace

std::vector<TableRow> distribution_table(std::uint64_t s_max, const SeriesConfig& cfg) {
  if (s_max < 2 || s_max > kTableMax) {
    throw DomainError("distribution_table: s_max must be in [2, 1000], got " + std::to_string(s_max));
  }
  cfg.validate();
  const Real constant = asymptotics::series_constant(cfg).value;
  std::vector<BigNat> thetas = exact::theta_sequence(s_max);

  std::vector<TableRow> rows;
  rows.reserve(s_max);
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    TableRow row{s, std::move(thetas[s - 1]), std::nullopt, std::nullopt, {}};
    if (s >= 2) {
      Real approx = asymptotics::stirling_approx(s - 1, constant);
      const Real exact_real = Real::from_integer(row.exact, cfg.precision_digits);
      row.rel_error = abs(approx - exact_real) / exact_real;
      row.approx = std::move(approx);
    }
    if (s == 15) {
      row.note = "published value " + std::string(published::kTheta15) +
                 " differs; it equals 1+15*theta(14), not 1+14*theta(14)";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SeatingInstance SeatingInstance::make(std::uint64_t s) {
  if (s == 0) {
    throw DomainError("SeatingInstance: s must be a positive integer");
  }
  SeatingInstance out{s, {}};
  out.group_sizes.reserve(s);
  for (std::uint64_t j = 1; j <= s; ++j) out.group_sizes.push_back(j);
  return out;
}

std::uint64_t SeatingInstance::total_people() const {
  std::uint64_t total = 0;
  for (const auto g : group_sizes) total += g;
  return total;
}

BigNat seating_count_formula(std::uint64_t s) {
  if (s == 0) {
    throw DomainError("seating_count_formula: s must be a positive integer");
  }
  BigNat count = 1;
  BigNat falling = 1;  // s!/(s−j)!
  for (std::uint64_t j = 1; j <= s; ++j) {
    falling *= s - j + 1;
    count *= falling;
  }
  return count;
}

BigNat seating_bruteforce(std::uint64_t s) {
  if (s == 0 || s > kSeatingBruteforceMax) {
    throw DomainError("seating_bruteforce: s must be in [1, 4], got " + std::to_string(s));
  }
  const SeatingInstance instance = SeatingInstance::make(s);
  std::vector<std::uint64_t> row_of_person;
  for (std::uint64_t row = 0; row < s; ++row) {
    for (std::uint64_t i = 0; i < instance.group_sizes[row]; ++i) row_of_person.push_back(row);
  }

  const std::uint64_t seats = s * s;  // seat index = row·s + column
  std::vector<bool> taken(seats, false);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t person) {
    if (person == row_of_person.size()) {
      ++count;
      return;
    }
    for (std::uint64_t seat = 0; seat < seats; ++seat) {
      if (taken[seat] || seat / s != row_of_person[person]) continue;
      taken[seat] = true;
      place(person + 1);
      taken[seat] = false;
    }
  };
  place(0);
  return BigNat(count);
}

const ReportEntry* DiscrepancyReport::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

std::uint64_t ratio_monotone_start(const std::vector<asymptotics::RatioPoint>& ratios) {
  if (ratios.empty()) return 2;
  std::size_t i = ratios.size() - 1;
  while (i > 0 && ratios[i - 1].ratio > ratios[i].ratio) --i;
  return ratios[i].s;
}

DiscrepancyReport discrepancy_report(std::uint64_t s_max, const SeriesConfig& cfg,
                                     unsigned display_digits) {
  if (s_max < 15) {
    throw DomainError("discrepancy_report: s_max must be at least 15, got " + std::to_string(s_max));
  }
  cfg.validate();
  DiscrepancyReport report;
  auto add = [&](std::string key, std::string value, std::string provenance) {
    report.entries.push_back({std::move(key), std::move(value), std::move(provenance)});
  };

  // (a) Θ(15).
  const BigNat theta14 = exact::theta(14);
  const BigNat theta15 = exact::theta(15);
  BigNat wrong_multiplier = theta14;
  wrong_multiplier *= 15;
  wrong_multiplier += 1;
  const Real published15 = Real::parse(published::kTheta15, cfg.precision_digits);
  const bool published_matches_exact = Real::from_integer(theta15, cfg.precision_digits) == published15;
  add("theta15.computed", theta15.to_string(), "exact recurrence theta(s+1)=1+s*theta(s)");
  add("theta15.published", std::string(published::kTheta15), "published table");
  add("theta15.one_plus_15_theta14", wrong_multiplier.to_string(),
      "exact arithmetic; rounds to the published figure");
  add("theta15.discrepancy", published_matches_exact ? "false" : "true",
      "computed vs published");

  // (b) ratio study.
  const auto constant = asymptotics::series_constant(cfg);
  const Real limit = asymptotics::limit_reference(cfg.precision_digits);
  const auto ratios = asymptotics::ratio_study(s_max, cfg);
  add("constant.series", constant.value.to_string(display_digits),
      "sum e^m/m^(m+1/2), " + std::to_string(constant.terms_used) + " terms");
  add("constant.series.truncation_bound", constant.truncation_bound.to_scientific(3),
      "geometric tail majorant");
  add("constant.limit_reference", limit.to_string(display_digits), "closed form (e-1)*sqrt(2*pi)");
  for (const auto& point : ratios) {
    add("ratio.r(" + std::to_string(point.s) + ")", point.ratio.to_string(display_digits),
        "log-space theta(s+1)/(s^s*sqrt(s)*e^-s)");
  }
  const Real& last = ratios.back().ratio;
  const std::string at = "(" + std::to_string(s_max) + ")";
  add("ratio.gap_to_series_constant" + at, relative_gap(last, constant.value, 6),
      "|r-C|/C");
  add("ratio.gap_to_limit_reference" + at, relative_gap(last, limit, 6),
      "|r-(e-1)sqrt(2pi)|/((e-1)sqrt(2pi))");
  const std::uint64_t monotone_from = ratio_monotone_start(ratios);
  add("ratio.monotone_decreasing_from", std::to_string(monotone_from),
      "first s0 with r strictly decreasing on [s0, s_max]");
  add("ratio.monotone_decreasing_from_3", monotone_from <= 3 ? "true" : "false",
      "claimed property r decreasing for s>=3");

  // (c) seating.
  for (std::uint64_t s = 1; s <= kSeatingBruteforceMax; ++s) {
    const std::string sfx = "(" + std::to_string(s) + ")";
    const BigNat n = seating_count_formula(s);
    const BigNat enumerated = seating_bruteforce(s);
    const BigNat t = exact::theta(s + 1);
    add("seating.N" + sfx, n.to_string(), "product formula prod_j s!/(s-j)!");
    add("seating.N_bruteforce" + sfx, enumerated.to_string(), "exhaustive enumeration");
    add("seating.theta(" + std::to_string(s + 1) + ")", t.to_string(), "exact recurrence");
    add("seating.equal" + sfx, n == t ? "true" : "false", "N(s) vs theta(s+1)");
  }
  return report;
}

}  // namespace theta::applications

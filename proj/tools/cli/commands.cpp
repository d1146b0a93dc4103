#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/format.hpp"
#include "theta/applications.hpp"
#include "theta/errors.hpp"
#include "theta/exact.hpp"
#include "theta/weierstrass.hpp"

namespace theta::cli {

using asymptotics::SeriesConfig;

namespace {

constexpr std::uint64_t kVerifyMin = 15;
constexpr std::uint64_t kFloorECheckMax = 500;
constexpr std::uint64_t kWeierstrassOracleMax = 10;
constexpr std::uint64_t kWeightedSumMax = 20;
constexpr std::uint64_t kRatioMonotoneFrom = 5;
constexpr std::uint64_t kTableCheckMax = 200;

std::uint64_t parse_positive(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || value == 0) {
    throw DomainError(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

unsigned default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') {
    return kDefaultPrecisionDigits;
  }
  const std::uint64_t digits = parse_positive(env, kPrecisionEnv);
  if (digits < kMinPrecisionDigits || digits > 100000) {
    throw DomainError(std::string(kPrecisionEnv) + " out of range");
  }
  return static_cast<unsigned>(digits);
}

struct NumericFlags {
  unsigned precision = kDefaultPrecisionDigits;
  std::string tolerance = "1e-30";
  unsigned max_terms = 200;
  unsigned digits = 10;

  void attach(CLI::App* cmd) {
    cmd->add_option("--precision", precision, "Working precision in decimal digits")
        ->check(CLI::Range(kMinPrecisionDigits, 100000u));
    cmd->add_option("--tolerance", tolerance, "Truncation tolerance (e.g. 1e-30)");
    cmd->add_option("--max-terms", max_terms, "Maximum series terms / product factors")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--digits", digits, "Significant digits in human-readable output")
        ->check(CLI::Range(1u, 1000u));
  }

  SeriesConfig config() const { return SeriesConfig::make(tolerance, max_terms, precision); }
};

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

Real relative_difference(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

int cmd_exact(const std::string& s_text, bool identity_check, std::ostream& out) {
  const std::uint64_t s = parse_positive(s_text, "s");
  out << exact::theta(s).to_string() << '\n';
  if (!identity_check) {
    return kExitOk;
  }
  const BigNat next = exact::theta(s + 1);
  BigNat expected_next = exact::theta(s);
  expected_next *= s;
  expected_next += 1;
  const bool recurrence = next == expected_next;
  const bool sum_form = exact::theta_sum_form(s) == exact::theta(s);
  const bool falling = exact::falling_factorial_sum(s) == next;
  const bool floor_e = exact::floor_e_factorial_check(s);
  out << "recurrence theta(s+1)=1+s*theta(s): " << pass_fail(recurrence) << '\n';
  out << "sum form sum_{m=1}^{s-1} (s-1)!/m!: " << pass_fail(sum_form) << '\n';
  out << "falling factorial sum = theta(s+1): " << pass_fail(falling) << '\n';
  out << "floor(e*s!) - s! = theta(s+1): " << pass_fail(floor_e) << '\n';
  return recurrence && sum_form && falling && floor_e ? kExitOk : kExitCheckFailed;
}

int cmd_approx(const std::string& s_text, const NumericFlags& flags, std::ostream& out) {
  const std::uint64_t s = parse_positive(s_text, "s");
  const SeriesConfig cfg = flags.config();
  const auto constant = asymptotics::series_constant(cfg);
  const Real approx = asymptotics::stirling_approx(s, constant.value);
  out << "stirling_approx(" << s << ") = " << approx.to_string(flags.digits) << '\n';
  out << "constant = " << constant.value.to_string(flags.digits) << '\n';
  out << "truncation_bound = " << constant.truncation_bound.to_scientific(3) << '\n';
  out << "terms_used = " << constant.terms_used << '\n';
  return kExitOk;
}

int cmd_table(std::uint64_t max, const std::string& format_name, const std::string& out_path,
              const NumericFlags& flags, std::ostream& out, std::ostream& err) {
  const OutputFormat format = parse_output_format(format_name);
  const auto rows = applications::distribution_table(max, flags.config());
  std::ostringstream buffer;
  switch (format) {
    case OutputFormat::kCsv:
      write_csv(buffer, rows);
      break;
    case OutputFormat::kJson:
      write_json(buffer, rows);
      break;
    case OutputFormat::kPlainTable:
      write_plain(buffer, rows, flags.digits);
      break;
  }
  if (out_path.empty()) {
    out << buffer.str();
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "table: cannot write '" << out_path << "'\n";
    return kExitUsage;
  }
  file << buffer.str();
  file.flush();
  if (!file) {
    err << "table: write to '" << out_path << "' failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_verify(std::uint64_t s_max, const std::string& format, const NumericFlags& flags,
               std::ostream& out, std::ostream& err) {
  if (s_max < kVerifyMin) {
    err << "verify: --s-max must be at least " << kVerifyMin << '\n';
    return kExitUsage;
  }
  if (format != "text" && format != "json") {
    err << "verify: unknown format '" << format << "'\n";
    return kExitUsage;
  }
  const SeriesConfig cfg = flags.config();
  const auto checks = run_invariant_suite(s_max, cfg);
  const auto report = applications::discrepancy_report(s_max, cfg, flags.digits);

  bool all = true;
  if (format == "json") {
    write_report_json(out, report);
    for (const auto& c : checks) all = all && c.passed;
    for (const auto& c : checks) {
      if (!c.passed) err << "check " << c.name << ": FAIL (" << c.detail << ")\n";
    }
  } else {
    for (const auto& c : checks) {
      out << "check " << c.name << ": " << pass_fail(c.passed) << " (" << c.detail << ")\n";
      all = all && c.passed;
    }
    out << "# report\n";
    write_report_text(out, report);
  }
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t s_max, const SeriesConfig& cfg) {
  cfg.validate();
  std::vector<CheckResult> checks;
  const unsigned digits = cfg.precision_digits;
  // Rounding floor below which tolerance-scaled thresholds are meaningless.
  const Real rounding_floor = Real::parse("1e-" + std::to_string(digits - 10), digits);

  // Published exact values.
  {
    bool ok = true;
    for (std::uint64_t s = 1; s <= 13; ++s) {
      ok = ok && exact::theta(s).to_string() == applications::published::kThetaExact[s - 1];
    }
    checks.push_back({"published theta(1..13)", ok, "exact match"});
  }

  // Exact identities.
  {
    const auto thetas = exact::theta_sequence(s_max + 1);
    bool recurrence = true;
    bool sum_form = true;
    bool falling = true;
    for (std::uint64_t s = 1; s <= s_max; ++s) {
      BigNat next = thetas[s - 1];
      next *= s;
      next += 1;
      recurrence = recurrence && next == thetas[s];
      sum_form = sum_form && exact::theta_sum_form(s) == thetas[s - 1];
      falling = falling && exact::falling_factorial_sum(s) == thetas[s];
    }
    const std::string range = "s=1.." + std::to_string(s_max);
    checks.push_back({"recurrence", recurrence, range});
    checks.push_back({"sum form", sum_form, range});
    checks.push_back({"falling factorial sum", falling, range});

    const std::uint64_t floor_max = std::min(s_max, kFloorECheckMax);
    bool floor_e = true;
    for (std::uint64_t s = 1; s <= floor_max; ++s) floor_e = floor_e && exact::floor_e_factorial_check(s);
    checks.push_back({"floor(e*s!)", floor_e, "s=1.." + std::to_string(floor_max)});
  }

  // Series constant stability.
  {
    const auto fine = asymptotics::series_constant(cfg);
    SeriesConfig coarse_cfg = cfg;
    coarse_cfg.tolerance = Real::parse("1e-10", digits);
    const auto coarse = asymptotics::series_constant(coarse_cfg);
    const Real gap = relative_difference(coarse.value, fine.value);
    checks.push_back({"series constant stability", gap < Real::parse("1e-10", digits),
                      "rel gap 1e-10 vs configured tolerance " + gap.to_scientific(3)});
  }

  // Direct vs log-space approximant.
  {
    const Real constant = asymptotics::series_constant(cfg).value;
    const Real limit = Real::parse("1e-" + std::to_string(digits - 5), digits);
    Real worst(digits);
    const std::uint64_t top = std::min<std::uint64_t>(s_max, asymptotics::kLogSpaceThreshold);
    for (std::uint64_t s = 1; s <= top; ++s) {
      worst = max(worst, relative_difference(asymptotics::stirling_approx_logspace(s, constant),
                                             asymptotics::stirling_approx_direct(s, constant)));
    }
    checks.push_back({"approximant direct vs log-space", worst <= limit,
                      "s=1.." + std::to_string(top) + ", worst " + worst.to_scientific(3)});
  }

  // Weierstrass product against e^(−kγ)/k!.
  {
    const Real gamma = weierstrass::euler_mascheroni(digits).gamma;
    const Real limit = max(cfg.tolerance * 10UL, rounding_floor);
    Real worst(digits);
    bool ok = true;
    for (std::uint64_t k = 1; k <= kWeierstrassOracleMax; ++k) {
      const auto product = weierstrass::weierstrass_product(k, cfg);
      const Real oracle = exp(-(gamma * static_cast<unsigned long>(k))) /
                          Real::from_integer(exact::factorial(k), digits);
      const Real gap = relative_difference(product.value, oracle);
      worst = max(worst, gap);
      ok = ok && gap <= limit;
    }
    checks.push_back({"weierstrass product oracle", ok,
                      "k=1..10, worst " + worst.to_scientific(3) + " <= " + limit.to_scientific(3)});
  }

  // Weighted reciprocal-gamma sum against its closed form.
  {
    const std::uint64_t top = std::min(s_max, kWeightedSumMax);
    const Real limit = max(cfg.tolerance * 100UL, rounding_floor);
    Real worst(digits);
    for (std::uint64_t s = 1; s <= top; ++s) {
      worst = max(worst, relative_difference(weierstrass::reciprocal_gamma_weighted_sum(s, cfg),
                                             weierstrass::reciprocal_gamma_sum_closed_form(s, digits)));
    }
    checks.push_back({"weighted sum vs closed form", worst <= limit,
                      "s=1.." + std::to_string(top) + ", worst " + worst.to_scientific(3)});

    // e^(γs)·closed form = Θ(s+1)/s! increases toward e − 1.
    const Real gamma = weierstrass::euler_mascheroni(digits).gamma;
    const Real e_minus_1 = Real::e(digits) - Real(1, digits);
    bool ok = true;
    Real previous(digits);
    Real scaled(digits);
    for (std::uint64_t s = 1; s <= top; ++s) {
      scaled = exp(gamma * static_cast<unsigned long>(s)) * weierstrass::reciprocal_gamma_sum_closed_form(s, digits);
      ok = ok && scaled > previous && scaled < e_minus_1;
      previous = scaled;
    }
    checks.push_back({"scaled closed form increasing below e-1", ok,
                      "s=1.." + std::to_string(top) + ", gap at end " + (e_minus_1 - scaled).to_scientific(3)});
  }

  // Ratio study.
  {
    const auto ratios = asymptotics::ratio_study(s_max, cfg);
    const std::uint64_t start = applications::ratio_monotone_start(ratios);
    checks.push_back({"ratio decreasing from s=5", start <= kRatioMonotoneFrom,
                      "decreasing from s=" + std::to_string(start)});
    const Real limit = asymptotics::limit_reference(digits);
    const Real gap = relative_difference(ratios.back().ratio, limit);
    checks.push_back({"ratio near (e-1)sqrt(2pi)", gap < Real::parse("0.01", digits),
                      "r(" + std::to_string(s_max) + ") gap " + gap.to_scientific(3)});
  }

  // Seating.
  {
    bool ok = true;
    for (std::uint64_t s = 1; s <= applications::kSeatingBruteforceMax; ++s) {
      ok = ok && applications::seating_count_formula(s) == applications::seating_bruteforce(s);
    }
    checks.push_back({"seating formula vs enumeration", ok, "s=1..4"});
  }

  // Table approximant overestimates.
  {
    const std::uint64_t top = std::min(s_max, kTableCheckMax);
    const auto rows = applications::distribution_table(top, cfg);
    bool ok = true;
    for (const auto& row : rows) {
      if (row.s < 2) continue;
      const Real exact_real = Real::from_integer(row.exact, digits);
      ok = ok && row.rel_error->sign() > 0 && *row.approx > exact_real;
    }
    checks.push_back({"approximant above exact", ok, "s=2.." + std::to_string(top)});
  }
  return checks;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theta splitting function: exact values, asymptotics and verification", "theta"};
  app.require_subcommand(1);

  unsigned precision = kDefaultPrecisionDigits;
  try {
    precision = default_precision();
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  std::string s_text;
  bool identity_check = false;
  auto* exact_cmd = app.add_subcommand("exact", "Exact theta(s)");
  exact_cmd->add_option("s", s_text, "Argument s >= 1")->required();
  exact_cmd->add_flag("--identity-check", identity_check, "Also check the exact identities");

  NumericFlags approx_flags;
  approx_flags.precision = precision;
  auto* approx_cmd = app.add_subcommand("approx", "Asymptotic approximant s^s sqrt(s) e^-s C");
  approx_cmd->add_option("s", s_text, "Argument s >= 1")->required();
  approx_flags.attach(approx_cmd);

  NumericFlags table_flags;
  table_flags.precision = precision;
  std::uint64_t table_max = 15;
  std::string table_format = "plain";
  std::string table_out;
  auto* table_cmd = app.add_subcommand("table", "Distribution table of exact values and approximants");
  table_cmd->add_option("--max", table_max, "Largest s (2..1000)")->check(CLI::Range(2, 1000));
  table_cmd->add_option("--format", table_format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "plain-table", "csv", "json"}));
  table_cmd->add_option("--out", table_out, "Write to this file instead of stdout");
  table_flags.attach(table_cmd);

  NumericFlags verify_flags;
  verify_flags.precision = precision;
  verify_flags.digits = 12;
  std::uint64_t verify_s_max = 200;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite and the discrepancy report");
  verify_cmd->add_option("--s-max", verify_s_max, "Largest s in the ratio study (>= 15)");
  verify_cmd->add_option("--format", verify_format, "text or json");
  verify_flags.attach(verify_cmd);

  std::vector<const char*> argv;
  argv.push_back("theta");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*exact_cmd) return cmd_exact(s_text, identity_check, out);
    if (*approx_cmd) return cmd_approx(s_text, approx_flags, out);
    if (*table_cmd) return cmd_table(table_max, table_format, table_out, table_flags, out, err);
    if (*verify_cmd) return cmd_verify(verify_s_max, verify_format, verify_flags, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace theta::cli

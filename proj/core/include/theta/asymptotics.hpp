#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "theta/bignat.hpp"
#include "theta/real.hpp"

namespace theta::asymptotics {

/// Controls for series and product evaluation.
struct SeriesConfig {
  Real tolerance;               ///< absolute tail target (series) or relative target (products)
  unsigned max_terms;
  unsigned precision_digits;

  /// 50 digits, tolerance 1e-30, at most 200 terms.
  static SeriesConfig defaults();
  static SeriesConfig make(std::string_view tolerance, unsigned max_terms = 200,
                           unsigned precision_digits = kDefaultPrecisionDigits);

  /// Throws DomainError unless tolerance > 0, max_terms ≥ 1 and the
  /// precision is at least kMinPrecisionDigits.
  void validate() const;
};

/// A truncated series or product together with a rigorous bound on what the
/// truncation left out.
struct ApproxResult {
  Real value;
  Real truncation_bound;  ///< ≥ 0, same units as value
  unsigned terms_used;
};

/// e^m / m^(m+1/2).
Real series_term(unsigned m, unsigned precision_digits);

/// C = Σ_{m≥1} e^m / m^(m+1/2).
///
/// Terms are summed until the geometric majorant of the tail,
/// t_{M+1} / (1 − r) with r = t_{M+1}/t_M, drops below the tolerance. The
/// ratio t_{m+1}/t_m is decreasing in m, so once r < 1/2 the majorant is
/// rigorous. All terms are positive: the true constant lies in
/// [value, value + truncation_bound]. Throws ConvergenceError if max_terms is
/// reached first.
ApproxResult series_constant(const SeriesConfig& cfg);

/// s ≥ 1 past which stirling_approx switches to log-space evaluation.
inline constexpr std::uint64_t kLogSpaceThreshold = 300;

/// s^s · √s · e^(−s) · C with C = series_constant(cfg).
Real stirling_approx(std::uint64_t s, const SeriesConfig& cfg);
/// Same, with the constant supplied by the caller.
Real stirling_approx(std::uint64_t s, const Real& constant);

/// The two evaluation routes behind stirling_approx. Exposed so they can be
/// checked against each other.
Real stirling_approx_direct(std::uint64_t s, const Real& constant);
Real stirling_approx_logspace(std::uint64_t s, const Real& constant);

/// ln(s^s · √s · e^(−s)) = s·ln s + ln(s)/2 − s.
Real log_stirling_envelope(std::uint64_t s, unsigned precision_digits);

/// Natural log of an exact integer. The integer is split into a mantissa in
/// [1, 2) and a binary exponent E, so ln n = ln(mantissa) + E·ln 2; only the
/// leading bits needed for the requested precision are ever rounded.
Real log_bignat(const BigNat& n, unsigned precision_digits);

struct RatioPoint {
  std::uint64_t s;
  Real ratio;
};

/// r(s) = Θ(s+1) / (s^s · √s · e^(−s)) for s = 2..s_max, ordered by s,
/// evaluated in log-space from the exact Θ values.
std::vector<RatioPoint> ratio_study(std::uint64_t s_max, const SeriesConfig& cfg);

/// (e − 1)·√(2π), the limit of r(s).
Real limit_reference(unsigned precision_digits = kDefaultPrecisionDigits);

}  // namespace theta::asymptotics

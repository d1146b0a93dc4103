#include "theta/asymptotics.hpp"

#include <algorithm>
#include <string>

#include "theta/errors.hpp"
#include "theta/exact.hpp"

namespace theta::asymptotics {

namespace {

constexpr unsigned kGuardDigits = 10;

void require_positive(std::uint64_t s, const char* op) {
  if (s == 0) {
    throw DomainError(std::string(op) + ": argument must be a positive integer (got 0)");
  }
}

Real from_u64(std::uint64_t v, unsigned digits) { return Real::from_integer(BigNat(v), digits); }

}  // namespace

SeriesConfig SeriesConfig::defaults() { return make("1e-30"); }

SeriesConfig SeriesConfig::make(std::string_view tolerance, unsigned max_terms,
                                unsigned precision_digits) {
  SeriesConfig cfg{Real::parse(tolerance, std::max(precision_digits, kMinPrecisionDigits)), max_terms,
                   precision_digits};
  cfg.validate();
  return cfg;
}

void SeriesConfig::validate() const {
  if (precision_digits < kMinPrecisionDigits) {
    throw DomainError("SeriesConfig: precision_digits must be at least " +
                      std::to_string(kMinPrecisionDigits));
  }
  if (!tolerance.is_finite() || tolerance.sign() <= 0) {
    throw DomainError("SeriesConfig: tolerance must be positive");
  }
  if (max_terms < 1) {
    throw DomainError("SeriesConfig: max_terms must be at least 1");
  }
}

Real series_term(unsigned m, unsigned precision_digits) {
  require_positive(m, "series_term");
  const Real mr(static_cast<long>(m), precision_digits);
  Real exponent = mr - (mr + Real::parse("0.5", precision_digits)) * log(mr);
  return exp(exponent);
}

ApproxResult series_constant(const SeriesConfig& cfg) {
  cfg.validate();
  const unsigned work = cfg.precision_digits + kGuardDigits;
  const Real half = Real::parse("0.5", work);

  Real sum(work);
  Real current = series_term(1, work);
  for (unsigned m = 1;; ++m) {
    sum += current;
    Real next = series_term(m + 1, work);
    Real ratio = next / current;
    if (ratio < half) {
      Real bound = next / (Real(1, work) - ratio);
      if (bound <= cfg.tolerance) {
        return ApproxResult{sum.with_precision(cfg.precision_digits),
                            bound.with_precision(cfg.precision_digits), m};
      }
    }
    if (m >= cfg.max_terms) {
      throw ConvergenceError("series_constant: tail bound not below tolerance " +
                             cfg.tolerance.to_string(3) + " after " + std::to_string(m) +
                             (ratio < half ? " terms" : " terms (ratio test r < 1/2 not yet met)"));
    }
    current = std::move(next);
  }
}

Real log_stirling_envelope(std::uint64_t s, unsigned precision_digits) {
  require_positive(s, "log_stirling_envelope");
  const Real sr = from_u64(s, precision_digits);
  const Real ls = log(sr);
  return sr * ls + ls / 2UL - sr;
}

Real stirling_approx_direct(std::uint64_t s, const Real& constant) {
  require_positive(s, "stirling_approx");
  const unsigned digits = constant.precision_digits();
  const unsigned work = digits + kGuardDigits;
  const Real sr = from_u64(s, work);
  Real out = pow(sr, static_cast<unsigned long>(s)) * sqrt(sr) * exp(-sr) * constant.with_precision(work);
  return out.with_precision(digits);
}

Real stirling_approx_logspace(std::uint64_t s, const Real& constant) {
  require_positive(s, "stirling_approx");
  const unsigned digits = constant.precision_digits();
  const unsigned work = digits + kGuardDigits;
  Real out = exp(log_stirling_envelope(s, work) + log(constant.with_precision(work)));
  return out.with_precision(digits);
}

Real stirling_approx(std::uint64_t s, const Real& constant) {
  return s > kLogSpaceThreshold ? stirling_approx_logspace(s, constant)
                                : stirling_approx_direct(s, constant);
}

Real stirling_approx(std::uint64_t s, const SeriesConfig& cfg) {
  require_positive(s, "stirling_approx");
  return stirling_approx(s, series_constant(cfg).value);
}

Real log_bignat(const BigNat& n, unsigned precision_digits) {
  if (n.is_zero()) {
    throw DomainError("log_bignat: logarithm of zero");
  }
  const unsigned work = precision_digits + kGuardDigits;
  const std::size_t keep = static_cast<std::size_t>(bits_for_digits(work)) + 64;
  const std::size_t bits = n.bit_length();
  const BigNat top = bits > keep ? n.shifted_right(bits - keep) : n;
  const std::size_t top_bits = top.bit_length();

  // mantissa = top / 2^(top_bits − 1) in [1, 2); n ≈ mantissa · 2^(bits − 1).
  Real mantissa = Real::from_integer(top, work);
  mpfr_div_2ui(mantissa.get(), mantissa.get(), static_cast<unsigned long>(top_bits - 1), MPFR_RNDN);
  const Real exponent = from_u64(static_cast<std::uint64_t>(bits - 1), work);
  Real out = log(mantissa) + exponent * Real::ln2(work);
  return out.with_precision(precision_digits);
}

std::vector<RatioPoint> ratio_study(std::uint64_t s_max, const SeriesConfig& cfg) {
  cfg.validate();
  if (s_max < 2) {
    throw DomainError("ratio_study: s_max must be at least 2");
  }
  const unsigned digits = cfg.precision_digits;
  const unsigned work = digits + kGuardDigits;
  const std::vector<BigNat> thetas = exact::theta_sequence(s_max + 1);  // thetas[i] = Θ(i+1)

  std::vector<RatioPoint> out;
  out.reserve(s_max - 1);
  for (std::uint64_t s = 2; s <= s_max; ++s) {
    const Real log_ratio = log_bignat(thetas[s], work) - log_stirling_envelope(s, work);
    out.push_back(RatioPoint{s, exp(log_ratio).with_precision(digits)});
  }
  return out;
}

Real limit_reference(unsigned precision_digits) {
  const unsigned work = precision_digits + kGuardDigits;
  Real two_pi = Real::pi(work) * 2UL;
  Real out = (Real::e(work) - Real(1, work)) * sqrt(two_pi);
  return out.with_precision(precision_digits);
}

}  // namespace theta::asymptotics

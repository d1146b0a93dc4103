#include "theta/weierstrass.hpp"

#include <string>
#include <vector>

#include <gmpxx.h>

#include "theta/errors.hpp"
#include "theta/exact.hpp"

namespace theta::weierstrass {

using asymptotics::ApproxResult;
using asymptotics::SeriesConfig;

namespace {

constexpr unsigned kGuardDigits = 10;
constexpr unsigned kMaxCorrectionOrder = 12;

void require_positive(std::uint64_t v, const char* op) {
  if (v == 0) {
    throw DomainError(std::string(op) + ": argument must be a positive integer (got 0)");
  }
}

Real from_u64(std::uint64_t v, unsigned digits) { return Real::from_integer(BigNat(v), digits); }

// B_0 … B_{2·kMaxCorrectionOrder} from Σ_{i=0}^{n} C(n+1, i)·B_i = 0.
const std::vector<mpq_class>& bernoulli_numbers() {
  static const std::vector<mpq_class> table = [] {
    const unsigned n_max = 2 * kMaxCorrectionOrder;
    std::vector<mpq_class> b(n_max + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
      mpq_class acc = 0;
      mpz_class binom = 1;  // C(n+1, 0)
      for (unsigned i = 0; i < n; ++i) {
        acc += binom * b[i];
        binom = binom * (n + 1 - i) / (i + 1);
      }
      b[n] = -acc / mpq_class(n + 1);
      b[n].canonicalize();
    }
    return b;
  }();
  return table;
}

Real from_rational(const mpq_class& q, unsigned digits) {
  Real out(digits);
  mpfr_set_q(out.get(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real factorial_real(unsigned n, unsigned digits) {
  return Real::from_integer(exact::factorial(n), digits);
}

// n-th derivative (n ≥ 1) of f(x) = ln(x + k) − ln x − k/x:
//   (−1)^(n−1)(n−1)!·[(x+k)^(−n) − x^(−n)] − k·(−1)^n·n!·x^(−n−1)
Real tail_derivative(unsigned n, const Real& x, const Real& k) {
  const unsigned digits = x.precision_digits();
  const Real one(1, digits);
  Real difference = one / pow(x + k, static_cast<unsigned long>(n)) - one / pow(x, static_cast<unsigned long>(n));
  difference *= factorial_real(n - 1, digits);
  if (n % 2 == 0) difference = -difference;

  Real pole = k * factorial_real(n, digits) / pow(x, static_cast<unsigned long>(n + 1));
  if (n % 2 == 1) pole = -pole;
  return difference - pole;
}

// |Euler–Maclaurin remainder| of order q at cut-off M, as a bound on the log.
Real remainder_bound(unsigned q, const Real& cut, const Real& k) {
  const unsigned digits = cut.precision_digits();
  Real zeta(digits);
  mpfr_zeta_ui(zeta.get(), 2UL * q, MPFR_RNDU);
  const Real two_pi = Real::pi(digits) * 2UL;
  return zeta * 2UL / pow(two_pi, 2UL * q) * abs(tail_derivative(2 * q - 1, cut, k));
}

Real relative_bound(unsigned q, std::uint64_t cut, const Real& k) {
  const Real log_bound = remainder_bound(q, from_u64(cut, k.precision_digits()), k);
  return expm1(log_bound);
}

// Σ_{m>M} f(m) ≈ ∫_M^∞ f − f(M)/2 − Σ_{j=1}^{q} B_{2j}/(2j)!·f^(2j−1)(M)
Real tail_estimate(unsigned q, std::uint64_t cut, const Real& k) {
  const unsigned digits = k.precision_digits();
  const Real m = from_u64(cut, digits);
  const Real x = k / m;
  const Real integral = k - (m + k) * log1p(x);
  Real out = integral - log1p_minus_x(x) / 2UL;
  const auto& bernoulli = bernoulli_numbers();
  for (unsigned j = 1; j <= q; ++j) {
    Real coeff = from_rational(bernoulli[2 * j], digits) / factorial_real(2 * j, digits);
    out -= coeff * tail_derivative(2 * j - 1, m, k);
  }
  return out;
}

}  // namespace

GammaConstant euler_mascheroni(unsigned precision_digits) {
  return GammaConstant{Real::parse(kEulerMascheroniLiteral, precision_digits)};
}

Real log1p_minus_x(const Real& x) {
  const unsigned digits = x.precision_digits();
  if (abs(x) < Real::parse("1e-3", digits)) {
    // −x²/2 + x³/3 − x⁴/4 + …
    Real sum(digits);
    Real power = x * x;
    const Real eps = Real::parse("1e-" + std::to_string(digits + 5), digits);
    for (unsigned j = 2;; ++j) {
      Real term = power / static_cast<unsigned long>(j);
      if (j % 2 == 0) {
        sum -= term;
      } else {
        sum += term;
      }
      if (abs(term) <= eps * abs(sum)) break;
      power *= x;
    }
    return sum;
  }
  return log1p(x) - x;
}

Real weierstrass_partial_product(std::uint64_t k, std::uint64_t factors, unsigned precision_digits) {
  require_positive(k, "weierstrass_partial_product");
  const unsigned work = precision_digits + kGuardDigits;
  const Real kr = from_u64(k, work);
  Real log_sum(work);
  for (std::uint64_t m = 1; m <= factors; ++m) {
    log_sum += log1p_minus_x(kr / from_u64(m, work));
  }
  return exp(log_sum).with_precision(precision_digits);
}

ApproxResult weierstrass_product(std::uint64_t k, const SeriesConfig& cfg) {
  require_positive(k, "weierstrass_product");
  cfg.validate();
  const unsigned work = cfg.precision_digits + kGuardDigits;
  const Real kr = from_u64(k, work);
  const Real tolerance = cfg.tolerance.with_precision(work);

  for (unsigned q = 1; q <= kMaxCorrectionOrder; ++q) {
    if (relative_bound(q, cfg.max_terms, kr) > tolerance) {
      continue;
    }
    // The bound decreases in M; find the smallest admissible cut-off.
    std::uint64_t lo = 1;
    std::uint64_t hi = cfg.max_terms;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (relative_bound(q, mid, kr) <= tolerance) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    const std::uint64_t cut = lo;

    Real log_sum(work);
    for (std::uint64_t m = 1; m <= cut; ++m) {
      log_sum += log1p_minus_x(kr / from_u64(m, work));
    }
    log_sum += tail_estimate(q, cut, kr);
    const Real value = exp(log_sum);
    const Real bound = relative_bound(q, cut, kr) * value;
    return ApproxResult{value.with_precision(cfg.precision_digits),
                        bound.with_precision(cfg.precision_digits), static_cast<unsigned>(cut)};
  }
  throw ConvergenceError("weierstrass_product: k=" + std::to_string(k) +
                         " cannot reach tolerance " + cfg.tolerance.to_string(3) + " within " +
                         std::to_string(cfg.max_terms) + " factors");
}

Real reciprocal_gamma_weighted_sum(std::uint64_t s, const SeriesConfig& cfg) {
  require_positive(s, "reciprocal_gamma_weighted_sum");
  cfg.validate();
  const unsigned work = cfg.precision_digits + kGuardDigits;
  const Real gamma = euler_mascheroni(work).gamma;
  Real sum(work);
  for (std::uint64_t j = 0; j < s; ++j) {
    const Real weight = exp(-(gamma * from_u64(j, work)));
    sum += weight * weierstrass_product(s - j, cfg).value.with_precision(work);
  }
  return sum.with_precision(cfg.precision_digits);
}

Real reciprocal_gamma_sum_closed_form(std::uint64_t s, unsigned precision_digits) {
  require_positive(s, "reciprocal_gamma_sum_closed_form");
  const unsigned work = precision_digits + kGuardDigits;
  const Real gamma = euler_mascheroni(work).gamma;
  Real ratio = Real::from_integer(exact::theta(s + 1), work) / Real::from_integer(exact::factorial(s), work);
  Real out = exp(-(gamma * from_u64(s, work))) * ratio;
  return out.with_precision(precision_digits);
}

Real reciprocal_gamma_sum_asymptote(std::uint64_t s, const SeriesConfig& cfg) {
  require_positive(s, "reciprocal_gamma_sum_asymptote");
  const unsigned work = cfg.precision_digits + kGuardDigits;
  const Real gamma = euler_mascheroni(work).gamma;
  const Real constant = asymptotics::series_constant(cfg).value.with_precision(work);
  Real out = exp(-(gamma * from_u64(s, work))) * constant / sqrt(Real::pi(work) * 2UL);
  return out.with_precision(cfg.precision_digits);
}

}  // namespace theta::weierstrass

#pragma once

#include <cstdint>
#include <string_view>

#include "theta/asymptotics.hpp"
#include "theta/real.hpp"

/// The Weierstrass product for the reciprocal Gamma function at positive
/// integers,
///
///   ∏_{m≥1} (1 + k/m)·e^(−k/m) = e^(−γk) / k!,
///
/// and the weighted sum Σ_{j=0}^{s−1} e^(−γj)·∏(…)|_{k=s−j}, which collapses
/// exactly to e^(−γs)·Θ(s+1)/s!.
namespace theta::weierstrass {

/// Euler–Mascheroni constant, 60 decimals of the published value.
inline constexpr std::string_view kEulerMascheroniLiteral =
    "0.577215664901532860606512090082402431042159335939923598805767";

struct GammaConstant {
  Real gamma;
};

/// γ at the requested precision. Beyond 60 digits the extra digits are not
/// meaningful.
GammaConstant euler_mascheroni(unsigned precision_digits = kDefaultPrecisionDigits);

/// ln(1 + x) − x, with a power-series kernel for |x| < 1e-3 where the direct
/// difference cancels.
Real log1p_minus_x(const Real& x);

/// ∏_{m=1}^{factors} (1 + k/m)·e^(−k/m), no tail handling.
Real weierstrass_partial_product(std::uint64_t k, std::uint64_t factors,
                                 unsigned precision_digits = kDefaultPrecisionDigits);

/// The infinite product for integer k ≥ 1.
///
/// The first M factors are accumulated as Σ ln(1 + k/m) − k/m. The tail
/// Σ_{m>M} f(m), f(x) = ln(1 + k/x) − k/x, is replaced by its Euler–Maclaurin
/// expansion of order q; since f' is completely monotone the remainder is
/// bounded by 2ζ(2q)/(2π)^(2q)·|f^(2q−1)(M)|. The smallest q, then the
/// smallest M ≤ max_terms, whose bound maps to a relative error ≤ tolerance
/// is used. truncation_bound is that relative bound times the value;
/// terms_used is M. Throws ConvergenceError if no M ≤ max_terms suffices.
asymptotics::ApproxResult weierstrass_product(std::uint64_t k, const asymptotics::SeriesConfig& cfg);

/// Σ_{j=0}^{s−1} e^(−γj)·weierstrass_product(s − j).
Real reciprocal_gamma_weighted_sum(std::uint64_t s, const asymptotics::SeriesConfig& cfg);

/// e^(−γs)·Θ(s+1)/s!, from exact integers. The closed form of the weighted sum.
Real reciprocal_gamma_sum_closed_form(std::uint64_t s,
                                      unsigned precision_digits = kDefaultPrecisionDigits);

/// e^(−γs)·C/√(2π), the asymptote claimed for the weighted sum.
Real reciprocal_gamma_sum_asymptote(std::uint64_t s, const asymptotics::SeriesConfig& cfg);

}  // namespace theta::weierstrass

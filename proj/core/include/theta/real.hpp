#pragma once

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>

#include <mpfr.h>

namespace theta {

class BigNat;

inline constexpr unsigned kDefaultPrecisionDigits = 50;
inline constexpr unsigned kMinPrecisionDigits = 15;

/// Arbitrary-precision binary floating value with a working precision stated
/// in decimal digits.
///
/// A Real at p digits carries at least p·log2(10) mantissa bits, so every
/// correctly rounded operation has relative error below 10^(1−p). Binary
/// operations produce a result at the larger of the two operand precisions.
class Real {
 public:
  explicit Real(unsigned precision_digits = kDefaultPrecisionDigits);
  Real(long value, unsigned precision_digits);

  /// Decimal or scientific notation ("1e-30", "4.58597"). Throws DomainError
  /// on anything mpfr cannot consume completely.
  static Real parse(std::string_view text, unsigned precision_digits);
  static Real from_integer(const BigNat& value, unsigned precision_digits);
  static Real from_double(double value, unsigned precision_digits);

  static Real pi(unsigned precision_digits);
  static Real e(unsigned precision_digits);
  static Real ln2(unsigned precision_digits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned precision_digits() const { return digits_; }
  /// Same value re-rounded to another precision.
  Real with_precision(unsigned precision_digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(unsigned long rhs);
  Real& operator/=(unsigned long rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, unsigned long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, unsigned long rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with exactly `significant_digits` digits, e.g.
  /// "4.585970782e+00". Locale-independent and deterministic.
  std::string to_scientific(unsigned significant_digits) const;
  /// Human-oriented rendering similar to %g: fixed notation for moderate
  /// exponents, scientific otherwise, trailing zeros trimmed.
  std::string to_string(unsigned significant_digits = 10) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  void raise_precision(unsigned digits);

  mpfr_t value_;
  unsigned digits_;
};

/// Bits of mantissa used for a given decimal precision.
mpfr_prec_t bits_for_digits(unsigned precision_digits);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real expm1(const Real& x);
Real pow(const Real& base, unsigned long exponent);
Real pow(const Real& base, const Real& exponent);
Real max(const Real& a, const Real& b);

/// Full working precision, scientific notation.
std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace theta

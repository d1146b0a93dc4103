#include "theta/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <utility>

#include "theta/bignat.hpp"
#include "theta/errors.hpp"

namespace theta {

namespace {

// log2(10) rounded up, plus a few guard bits.
constexpr double kBitsPerDigit = 3.3219280948873623;
constexpr mpfr_prec_t kGuardBits = 4;

}  // namespace

mpfr_prec_t bits_for_digits(unsigned precision_digits) {
  return static_cast<mpfr_prec_t>(std::ceil(precision_digits * kBitsPerDigit)) + kGuardBits;
}

Real::Real(unsigned precision_digits) : digits_(precision_digits) {
  if (precision_digits < kMinPrecisionDigits) {
    throw DomainError("Real: precision must be at least " + std::to_string(kMinPrecisionDigits) +
                      " digits, got " + std::to_string(precision_digits));
  }
  mpfr_init2(value_, bits_for_digits(digits_));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, unsigned precision_digits) : Real(precision_digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real Real::parse(std::string_view text, unsigned precision_digits) {
  Real out(precision_digits);
  const std::string buffer(text);
  if (buffer.empty()) {
    throw DomainError("Real::parse: empty string");
  }
  char* end = nullptr;
  mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (end != buffer.c_str() + buffer.size()) {
    throw DomainError("Real::parse: not a number: '" + buffer + "'");
  }
  if (!out.is_finite()) {
    throw DomainError("Real::parse: not finite: '" + buffer + "'");
  }
  return out;
}

Real Real::from_integer(const BigNat& value, unsigned precision_digits) {
  Real out(precision_digits);
  mpfr_set_z(out.value_, value.mpz().get_mpz_t(), MPFR_RNDN);
  return out;
}

Real Real::from_double(double value, unsigned precision_digits) {
  Real out(precision_digits);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

Real Real::pi(unsigned precision_digits) {
  Real out(precision_digits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real Real::e(unsigned precision_digits) {
  Real out(precision_digits);
  mpfr_set_ui(out.value_, 1, MPFR_RNDN);
  mpfr_exp(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real Real::ln2(unsigned precision_digits) {
  Real out(precision_digits);
  mpfr_const_log2(out.value_, MPFR_RNDN);
  return out;
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  // mpfr_t cannot be empty, so the moved-from object keeps a valid zero.
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set_zero(value_, 1);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(unsigned precision_digits) const {
  Real out(precision_digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

void Real::raise_precision(unsigned digits) {
  if (digits > digits_) {
    mpfr_prec_round(value_, bits_for_digits(digits), MPFR_RNDN);
    digits_ = digits;
  }
}

Real& Real::operator+=(const Real& rhs) {
  raise_precision(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  raise_precision(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  raise_precision(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  raise_precision(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(unsigned long rhs) {
  mpfr_mul_ui(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(unsigned long rhs) {
  mpfr_div_ui(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Real::to_scientific(unsigned significant_digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  significant_digits = std::max(significant_digits, 1u);
  if (mpfr_zero_p(value_)) {
    std::string out = "0";
    if (significant_digits > 1) out += "." + std::string(significant_digits - 1, '0');
    return out + "e+00";
  }

  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exponent, 10, significant_digits, value_, MPFR_RNDN), &mpfr_free_str);
  std::string digits(raw.get());
  std::string out;
  if (!digits.empty() && digits.front() == '-') {
    out.push_back('-');
    digits.erase(0, 1);
  }
  out.push_back(digits.front());
  if (digits.size() > 1) {
    out.push_back('.');
    out.append(digits, 1, std::string::npos);
  }
  // mpfr reports 0.ddd × 10^exponent.
  const long e10 = static_cast<long>(exponent) - 1;
  out.push_back('e');
  out.push_back(e10 < 0 ? '-' : '+');
  std::string mag = std::to_string(e10 < 0 ? -e10 : e10);
  if (mag.size() < 2) mag.insert(0, "0");
  return out + mag;
}

std::string Real::to_string(unsigned significant_digits) const {
  if (!is_finite() || is_zero()) {
    return is_zero() ? "0" : to_scientific(significant_digits);
  }
  significant_digits = std::max(significant_digits, 1u);
  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exponent, 10, significant_digits, value_, MPFR_RNDN), &mpfr_free_str);
  std::string digits(raw.get());
  std::string sign;
  if (digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  const long e10 = static_cast<long>(exponent) - 1;
  if (e10 < -4 || e10 >= static_cast<long>(significant_digits)) {
    return to_scientific(significant_digits);
  }

  std::string out;
  if (e10 < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e10 - 1), '0') + digits;
  } else {
    const auto int_len = static_cast<std::size_t>(e10 + 1);
    out = digits.substr(0, int_len);
    if (digits.size() > int_len) out += "." + digits.substr(int_len);
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign + out;
}

namespace {

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real out(x.precision_digits());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }

Real pow(const Real& base, unsigned long exponent) {
  Real out(base.precision_digits());
  mpfr_pow_ui(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(std::max(base.precision_digits(), exponent.precision_digits()));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_scientific(x.precision_digits()); }

}  // namespace theta

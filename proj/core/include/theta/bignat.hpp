#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace theta {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value type over GMP. Every operation that could produce a negative
/// result throws DomainError instead, so the nonnegativity invariant holds for
/// every reachable value. Decimal serialization has no sign, no grouping and no
/// leading zeros (except the single digit "0").
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses a plain decimal digit string. Rejects empty input, signs,
  /// whitespace, separators and redundant leading zeros.
  static BigNat parse(std::string_view digits);

  std::string to_string() const;

  /// Number of significant bits; 0 for zero.
  std::size_t bit_length() const;
  bool is_zero() const { return sgn(value_) == 0; }

  /// Value divided by 2^bits, rounded toward zero.
  BigNat shifted_right(std::size_t bits) const;

  /// Throws DomainError if the value does not fit.
  std::uint64_t to_u64() const;

  BigNat& operator+=(const BigNat& rhs);
  BigNat& operator+=(std::uint64_t rhs);
  BigNat& operator*=(const BigNat& rhs);
  BigNat& operator*=(std::uint64_t rhs);
  /// Throws DomainError when rhs > *this.
  BigNat& operator-=(const BigNat& rhs);

  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
  friend BigNat operator*(BigNat lhs, const BigNat& rhs) { return lhs *= rhs; }
  friend BigNat operator-(BigNat lhs, const BigNat& rhs) { return lhs -= rhs; }

  friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& mpz() const { return value_; }

 private:
  explicit BigNat(mpz_class value) : value_(std::move(value)) {}

  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigNat& n);

}  // namespace theta

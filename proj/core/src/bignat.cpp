#include "theta/bignat.hpp"

#include <limits>
#include <ostream>

#include "theta/errors.hpp"

namespace theta {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "BigNat assumes an LP64 platform for GMP unsigned long arguments");

BigNat::BigNat(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {}

BigNat BigNat::parse(std::string_view digits) {
  if (digits.empty()) {
    throw DomainError("BigNat::parse: empty string");
  }
  for (const char c : digits) {
    if (c < '0' || c > '9') {
      throw DomainError("BigNat::parse: non-digit character in '" + std::string(digits) + "'");
    }
  }
  if (digits.size() > 1 && digits.front() == '0') {
    throw DomainError("BigNat::parse: leading zero in '" + std::string(digits) + "'");
  }
  return BigNat(mpz_class(std::string(digits), 10));
}

std::string BigNat::to_string() const { return value_.get_str(10); }

std::size_t BigNat::bit_length() const {
  if (is_zero()) {
    return 0;
  }
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

BigNat BigNat::shifted_right(std::size_t bits) const {
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), value_.get_mpz_t(), bits);
  return BigNat(std::move(out));
}

std::uint64_t BigNat::to_u64() const {
  if (!value_.fits_ulong_p()) {
    throw DomainError("BigNat::to_u64: value exceeds 64 bits");
  }
  return value_.get_ui();
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigNat& BigNat::operator+=(std::uint64_t rhs) {
  value_ += static_cast<unsigned long>(rhs);
  return *this;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigNat& BigNat::operator*=(std::uint64_t rhs) {
  value_ *= static_cast<unsigned long>(rhs);
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (cmp(value_, rhs.value_) < 0) {
    throw DomainError("BigNat subtraction would be negative");
  }
  value_ -= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigNat& n) { return os << n.to_string(); }

}  // namespace theta

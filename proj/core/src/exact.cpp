#include "theta/exact.hpp"

#include <string>

#include <gmpxx.h>

#include "theta/errors.hpp"

namespace theta::exact {

namespace {

void require_positive(std::uint64_t s, const char* op) {
  if (s == 0) {
    throw DomainError(std::string(op) + ": argument must be a positive integer (got 0)");
  }
}

// Terms of the partial tail used to sanity-check the closed-form majorant.
constexpr std::uint64_t kTailCheckTerms = 8;

}  // namespace

BigNat theta(std::uint64_t s) {
  require_positive(s, "theta");
  BigNat value;  // Θ(1)
  for (std::uint64_t n = 1; n < s; ++n) {
    value *= n;
    value += 1;
  }
  return value;
}

std::vector<BigNat> theta_sequence(std::uint64_t n) {
  std::vector<BigNat> out;
  out.reserve(n);
  if (n == 0) {
    return out;
  }
  out.emplace_back();
  for (std::uint64_t k = 1; k < n; ++k) {
    BigNat next = out.back();
    next *= k;
    next += 1;
    out.push_back(std::move(next));
  }
  return out;
}

BigNat theta_sum_form(std::uint64_t s) {
  require_positive(s, "theta_sum_form");
  const std::uint64_t top = s - 1;
  BigNat sum;
  BigNat quotient = 1;  // (s−1)!/m! for m = top
  for (std::uint64_t m = top; m >= 1; --m) {
    if (m < top) {
      quotient *= m + 1;
    }
    sum += quotient;
  }
  return sum;
}

BigNat falling_factorial_sum(std::uint64_t s) {
  require_positive(s, "falling_factorial_sum");
  BigNat sum = 1;  // length 0
  BigNat falling = 1;
  for (std::uint64_t k = 1; k < s; ++k) {
    falling *= s - k + 1;
    sum += falling;
  }
  return sum;
}

BigNat factorial(std::uint64_t n) {
  BigNat out = 1;
  for (std::uint64_t k = 2; k <= n; ++k) {
    out *= k;
  }
  return out;
}

FloorEFactorialCheck floor_e_factorial_detail(std::uint64_t s) {
  require_positive(s, "floor_e_factorial_check");

  // S(s) = Σ_{m=0}^{s} s!/m!, accumulated as falling factorials of s.
  BigNat partial_sum = 1;
  BigNat falling = 1;
  for (std::uint64_t k = 1; k <= s; ++k) {
    falling *= s - k + 1;
    partial_sum += falling;
  }
  BigNat s_factorial = falling;

  // Tail T = Σ_{j≥1} 1/((s+1)(s+2)…(s+j)).
  const mpz_class sz(static_cast<unsigned long>(s));
  mpq_class upper;
  if (s >= 2) {
    upper = mpq_class(1, sz);
  } else {
    // 1/(s+1) + (s+3)/((s+1)(s+2)^2)
    upper = mpq_class(1, sz + 1) + mpq_class(sz + 3, (sz + 1) * (sz + 2) * (sz + 2));
  }
  upper.canonicalize();
  const mpq_class lower(1, sz + 1);  // first tail term; the tail strictly exceeds it

  mpq_class partial_tail = 0;
  mpz_class denom = 1;
  for (std::uint64_t j = 1; j <= kTailCheckTerms; ++j) {
    denom *= sz + static_cast<unsigned long>(j);
    partial_tail += mpq_class(1, denom);
  }
  partial_tail.canonicalize();

  const bool bound_consistent = lower > 0 && partial_tail >= lower && partial_tail < upper;
  const bool bracket = bound_consistent && upper < 1;

  BigNat theta_from_sum = partial_sum - s_factorial;
  const bool matches = theta_from_sum == theta(s + 1);

  return FloorEFactorialCheck{std::move(partial_sum), std::move(s_factorial), bracket, matches};
}

bool floor_e_factorial_check(std::uint64_t s) { return floor_e_factorial_detail(s).passed(); }

}  // namespace theta::exact

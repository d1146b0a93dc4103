#pragma once

#include <cstdint>
#include <vector>

#include "theta/bignat.hpp"

/// Exact evaluation of the theta splitting function
///
///   Θ(1) = 0,   Θ(s+1) = 1 + s·Θ(s)   (s ≥ 1)
///
/// and of the integer identities that follow from it. Every routine here works
/// in exact integer (or rational) arithmetic; nothing is rounded.
///
/// Arguments are the function's own argument: theta(5) is Θ(5) = 41. Values
/// are pure functions of their inputs and safe to compute from any thread.
/// Arguments much beyond 10^5 are supported but slow, since the recurrence has
/// quadratic bit cost.
namespace theta::exact {

/// Θ(s) by iterating the recurrence upward from Θ(1) = 0. Throws DomainError
/// for s = 0.
BigNat theta(std::uint64_t s);

/// Θ(1), …, Θ(n) in one pass of the recurrence; element i holds Θ(i+1).
std::vector<BigNat> theta_sequence(std::uint64_t n);

/// Θ(s) through the closed form Σ_{m=1}^{s−1} (s−1)!/m!, each quotient built
/// as a descending product (s−1)(s−2)…(m+1) so no division is ever taken.
/// Returns 0 for s = 1 (empty sum).
BigNat theta_sum_form(std::uint64_t s);

/// Σ_{k=0}^{s−1} s(s−1)…(s−k+1): falling factorials of s of every length from
/// 0 (the empty product, 1) through s−1. Equals Θ(s+1).
BigNat falling_factorial_sum(std::uint64_t s);

/// n!, with 0! = 1.
BigNat factorial(std::uint64_t n);

/// Outcome of the floor(e·s!) check, with the intermediate quantities kept
/// for reporting.
struct FloorEFactorialCheck {
  BigNat partial_sum;   ///< S(s) = Σ_{m=0}^{s} s!/m!
  BigNat factorial;     ///< s!
  bool bracket_holds;   ///< S(s) ≤ e·s! < S(s) + 1, shown by the rational tail bound
  bool theta_matches;   ///< Θ(s+1) = S(s) − s!

  bool passed() const { return bracket_holds && theta_matches; }
};

/// Shows S(s) = floor(e·s!) and Θ(s+1) = S(s) − s! without evaluating e.
///
/// e·s! − S(s) is the tail Σ_{m>s} s!/m!, which is strictly positive and is
/// bounded above by the exact rational 1/s (geometric majorant, s ≥ 2) or
/// 13/18 (s = 1, where 1/s is not strict). The bound is also cross-checked
/// against an exact partial tail so a wrong majorant cannot pass silently.
FloorEFactorialCheck floor_e_factorial_detail(std::uint64_t s);

bool floor_e_factorial_check(std::uint64_t s);

}  // namespace theta::exact

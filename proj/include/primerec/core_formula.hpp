#pragma once

// Literal evaluation of the next-prime recurrence
//
//   F(n) = n + 1 + sum_{m=n+1}^{2n} prod_{i=n+1}^{m} P(i)
//   P(i) = -floor(-(d(i) - 2) / i)
//   d(i) = sum_{j=1}^{i} (floor(i/j) - floor((i-1)/j))
//
// Everything here is computed exactly as written, with floor rounding toward
// negative infinity. These functions are the reference that the faster
// evaluators in strategies.hpp are checked against.

#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

#include "primerec/error.hpp"
#include "primerec/nat.hpp"
#include "primerec/op_counter.hpp"

namespace primerec {

template <typename T>
concept SignedInteger = std::numeric_limits<T>::is_integer && std::numeric_limits<T>::is_signed;

/// Greatest q with q <= numer / denom. Requires denom > 0.
template <SignedInteger Int>
Int floor_div(const Int& numer, const Int& denom) {
  if (denom <= 0) throw_domain("floor_div: denominator must be positive");
  Int q;
  Int r;
  if constexpr (std::is_integral_v<Int>) {
    q = numer / denom;
    r = numer % denom;
  } else {
    boost::multiprecision::divide_qr(numer, denom, q, r);
  }
  // Both paths truncate toward zero; step down when the remainder is negative.
  if (r < 0) --q;
  return q;
}

/// floor(i/j) - floor((i-1)/j); 1 exactly when j divides i.
inline Indicator floor_div_delta(const Nat& i, const Nat& j, OpCounter& counter) {
  if (i.is_zero()) throw_domain("floor_div_delta: i must be >= 1");
  if (j.is_zero() || j > i) throw_domain("floor_div_delta: j must satisfy 1 <= j <= i");
  ++counter.floor_pair_evals;
  const Integer& top = i.value();
  return Indicator::from(floor_div<Integer>(top, j.value()) - floor_div<Integer>(top - 1, j.value()));
}

inline Indicator floor_div_delta(const Nat& i, const Nat& j) {
  OpCounter scratch;
  return floor_div_delta(i, j, scratch);
}

/// Number of divisors of i, as the sum of floor differences over j = 1..i.
inline Nat divisor_count_literal(const Nat& i, OpCounter& counter) {
  if (i.is_zero()) throw_domain("divisor_count_literal: i must be >= 1");
  Nat total = 0;
  for (Nat j = 1; j <= i; ++j) {
    if (floor_div_delta(i, j, counter)) ++total;
  }
  return total;
}

inline Nat divisor_count_literal(const Nat& i) {
  OpCounter scratch;
  return divisor_count_literal(i, scratch);
}

/// -floor(-(d - 2) / i) for a given divisor count d of i.
inline Indicator prime_indicator_from_divisor_count(const Nat& i, const Nat& d) {
  if (i < 2) throw_domain("prime indicator is defined for integers i >= 2, got i = " + i.str());
  const Integer numer = -(d - Nat(2));
  return Indicator::from(-floor_div<Integer>(numer, i.value()));
}

/// P(i): 0 when i is prime, 1 when i is composite. Defined for i >= 2 only.
inline Indicator p_literal(const Nat& i, OpCounter& counter) {
  if (i < 2) throw_domain("prime indicator is defined for integers i >= 2, got i = " + i.str());
  ++counter.p_evals;
  return prime_indicator_from_divisor_count(i, divisor_count_literal(i, counter));
}

inline Indicator p_literal(const Nat& i) {
  OpCounter scratch;
  return p_literal(i, scratch);
}

/// F(n), evaluating the full double sum with no early exit.
///
/// Each P(i) for i in (n, 2n] is evaluated once through p_literal and then
/// every product of the outer sum is multiplied out in full, so the sum costs
/// Theta(n^2) factor multiplications on top of the n indicator evaluations.
inline Nat f_literal(const Nat& n, OpCounter& counter) {
  if (n.is_zero()) throw_domain("F(n) requires n >= 1");
  const auto width = n.to<std::size_t>();
  if (!width) throw_domain("F(n): n = " + n.str() + " is too large to evaluate literally");

  std::vector<Indicator> factors;
  factors.reserve(*width);
  Nat i = n;
  for (std::size_t k = 0; k < *width; ++k) factors.push_back(p_literal(++i, counter));

  Nat sum = 0;
  for (std::size_t last = 0; last < *width; ++last) {
    Integer product = 1;
    for (std::size_t k = 0; k <= last; ++k) product *= factors[k].value();
    sum += Nat(product);
  }
  return n + 1 + sum;
}

inline Nat f_literal(const Nat& n) {
  OpCounter scratch;
  return f_literal(n, scratch);
}

}  // namespace primerec

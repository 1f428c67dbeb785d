#pragma once

// Faster evaluators of F(n) that must agree with f_literal on every input.
//
//  * f_shortcircuit keeps the literal P(i) but stops the outer sum at the
//    first product that hits zero; every later product carries that factor.
//  * f_windowed computes d(i) for the whole window (n, 2n] at once by walking
//    multiples of each j <= 2n, then returns the first i whose indicator is 0.
//    Summing the products counts exactly the composites between n and that
//    position, so n + 1 + sum lands on it.

#include <cstdint>
#include <vector>

#include "primerec/core_formula.hpp"
#include "primerec/error.hpp"
#include "primerec/nat.hpp"
#include "primerec/op_counter.hpp"
#include "primerec/oracle.hpp"

namespace primerec {

/// Largest n the windowed evaluator accepts; bounds the window allocation.
inline constexpr std::uint64_t kMaxWindowedN = 100'000'000;

/// Divisor counts for every i in [lo, hi] with lo = n + 1 and hi = 2n.
struct Window {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint32_t> dcounts;

  std::uint32_t count_at(std::uint64_t i) const {
    if (i < lo || i > hi) throw_domain("window index out of range");
    return dcounts[i - lo];
  }
};

inline Window window_divisor_counts(const Nat& n, OpCounter& counter) {
  if (n.is_zero()) throw_domain("window_divisor_counts: n must be >= 1");
  const auto small = n.to<std::uint64_t>();
  if (!small || *small > kMaxWindowedN) {
    throw_domain("windowed strategy supports n <= " + std::to_string(kMaxWindowedN) + ", got " + n.str());
  }
  const std::uint64_t base = *small;
  Window w{base + 1, 2 * base, std::vector<std::uint32_t>(base, 0)};
  for (std::uint64_t j = 1; j <= w.hi; ++j) {
    for (std::uint64_t k = (base / j + 1) * j; k <= w.hi; k += j) {
      ++w.dcounts[k - w.lo];
      ++counter.multiple_marks;
    }
  }
  return w;
}

/// P from a known divisor count by case split: d = 2 is prime, d > 2 composite.
inline Indicator prime_indicator_by_cases(std::uint64_t d) {
  if (d < 2) throw error(errc::invariant_violation, "divisor count below 2 for an index >= 2");
  return d == 2 ? Indicator::zero() : Indicator::one();
}

inline Nat f_windowed(const Nat& n, OpCounter& counter) {
  const Window w = window_divisor_counts(n, counter);
  for (std::uint64_t i = w.lo; i <= w.hi; ++i) {
    ++counter.p_evals;
    if (!prime_indicator_by_cases(w.count_at(i))) return Nat(i);
  }
  throw error(errc::invariant_violation, "no prime in (" + n.str() + ", " + std::to_string(w.hi) + "]");
}

inline Nat f_shortcircuit(const Nat& n, OpCounter& counter) {
  if (n.is_zero()) throw_domain("F(n) requires n >= 1");
  const Nat last = n * 2;
  Nat sum = 0;
  Integer product = 1;
  for (Nat m = n + 1; m <= last; ++m) {
    product *= p_literal(m, counter).value();
    if (product == 0) break;
    sum += Nat(product);
  }
  return n + 1 + sum;
}

/// Floor-pair evaluations f_shortcircuit performs: the sum of i over (n, q],
/// q being the next prime after n.
inline Nat predicted_literal_cost(const Nat& n) {
  const Nat q = oracle::next_prime_oracle(n);
  Nat cost = 0;
  for (Nat i = n + 1; i <= q; ++i) cost += i;
  return cost;
}

}  // namespace primerec

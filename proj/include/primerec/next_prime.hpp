#pragma once

#include <cstddef>
#include <vector>

#include "primerec/core_formula.hpp"
#include "primerec/nat.hpp"
#include "primerec/op_counter.hpp"
#include "primerec/oracle.hpp"
#include "primerec/strategies.hpp"
#include "primerec/strategy.hpp"

namespace primerec {

/// F(n) by the chosen strategy. For prime n this is the next prime; the
/// recurrence in fact yields the next prime for every n >= 1.
inline Nat next_prime(const Nat& n, Strategy strategy, OpCounter& counter) {
  if (n.is_zero()) throw_domain("next_prime requires n >= 1");
  switch (strategy) {
    case Strategy::LiteralFormula: return f_literal(n, counter);
    case Strategy::WindowedSieve: return f_windowed(n, counter);
    case Strategy::OracleDirect: return oracle::next_prime_oracle(n);
  }
  throw error(errc::invariant_violation, "unhandled strategy");
}

inline Nat next_prime(const Nat& n, Strategy strategy) {
  OpCounter scratch;
  return next_prime(n, strategy, scratch);
}

/// The first `count` primes, seeded with 2 and advanced only through F.
inline std::vector<Nat> prime_sequence(std::size_t count, Strategy strategy) {
  std::vector<Nat> primes;
  if (count == 0) return primes;
  primes.reserve(count);
  primes.emplace_back(2);
  while (primes.size() < count) primes.push_back(next_prime(primes.back(), strategy));
  return primes;
}

}  // namespace primerec

#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "primerec/error.hpp"
#include "primerec/nat.hpp"
#include "primerec/next_prime.hpp"
#include "primerec/oracle.hpp"
#include "primerec/strategy.hpp"

namespace primerec {

inline constexpr std::uint64_t kMaxVerifyLimit = 1'000'000'000;

struct VerificationFailure {
  Nat p;
  Nat got;
  Nat expected;
};

struct VerificationReport {
  Nat limit;
  Nat checked;
  std::vector<VerificationFailure> failures;
  Strategy strategy = Strategy::WindowedSieve;

  bool passed() const { return failures.empty(); }
};

/// Checks F(p) against the oracle for every prime p <= limit. Primes come
/// from a sieve rather than from iterating F, so one wrong value cannot push
/// the check onto non-primes.
inline VerificationReport run_verify(const Nat& limit, Strategy strategy) {
  if (limit < 2) throw_domain("verify: limit must be >= 2, got " + limit.str());
  const auto bound = limit.to<std::uint64_t>();
  if (!bound || *bound > kMaxVerifyLimit) {
    throw_domain("verify: limit must be <= " + std::to_string(kMaxVerifyLimit));
  }

  VerificationReport report{limit, 0, {}, strategy};
  for (std::uint64_t p : oracle::build_sieve(*bound).primes()) {
    const Nat got = next_prime(p, strategy);
    const Nat expected = oracle::next_prime_oracle(p);
    ++report.checked;
    if (got != expected) report.failures.push_back({p, got, expected});
  }
  return report;
}

inline void print_report(const VerificationReport& report, std::ostream& out) {
  out << "checked=" << report.checked << " failures=" << report.failures.size() << '\n';
  for (const auto& f : report.failures) out << f.p << ' ' << f.got << ' ' << f.expected << '\n';
}

}  // namespace primerec

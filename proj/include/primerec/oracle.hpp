#pragma once

// Ground-truth number theory used to check the recurrence. Nothing in this
// header depends on core_formula.hpp: primality is decided by trial division
// or by a sieve, and divisor counts by direct enumeration with the modulo
// operator.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "primerec/error.hpp"
#include "primerec/nat.hpp"

namespace primerec::oracle {

template <typename T>
concept IntegerLike = std::numeric_limits<T>::is_integer;

/// floor(sqrt(x)) by Newton iteration on integers.
template <IntegerLike T>
T isqrt(const T& x) {
  if (x < 0) throw_domain("isqrt of a negative value");
  if (x < 2) return x;
  T root = x / 2 + 1;  // >= sqrt(x), and small enough that root + x / root cannot overflow
  T next = (root + x / root) / 2;
  while (next < root) {
    root = next;
    next = (root + x / root) / 2;
  }
  return root;
}

template <IntegerLike T>
bool is_prime_trial(const T& i) {
  if (i < 2) return false;
  const T bound = isqrt(i);
  for (T d = 2; d <= bound; ++d) {
    if (i % d == 0) return false;
  }
  return true;
}

inline bool is_prime_trial(const Nat& i) {
  if (auto small = i.to<std::uint64_t>()) return is_prime_trial(*small);
  return is_prime_trial(i.value());
}

/// Smallest prime strictly greater than n.
inline Nat next_prime_oracle(const Nat& n) {
  Nat candidate = n;
  do {
    ++candidate;
  } while (!is_prime_trial(candidate));
  return candidate;
}

template <IntegerLike T>
T divisor_count_enum(const T& i) {
  if (i < 1) throw_domain("divisor_count_enum: i must be >= 1");
  T count = 0;
  for (T d = 1; d <= i; ++d) {
    if (i % d == 0) ++count;
  }
  return count;
}

inline Nat divisor_count_enum(const Nat& i) {
  if (auto small = i.to<std::uint64_t>()) return divisor_count_enum(*small);
  return Nat(divisor_count_enum(i.value()));
}

/// Primality flags for 0..limit, built by the sieve of Eratosthenes.
class SieveTable {
 public:
  explicit SieveTable(std::uint64_t limit) : limit_(limit) {
    if (limit == 0) throw_domain("build_sieve: limit must be >= 1");
    if (limit >= std::numeric_limits<std::size_t>::max()) throw_domain("build_sieve: limit too large");
    flags_.assign(static_cast<std::size_t>(limit) + 1, true);
    flags_[0] = false;
    flags_[1] = false;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
      if (!flags_[p]) continue;
      for (std::uint64_t k = p * p; k <= limit; k += p) flags_[k] = false;
    }
  }

  std::uint64_t limit() const noexcept { return limit_; }
  std::size_t size() const noexcept { return flags_.size(); }

  bool is_prime(std::uint64_t i) const {
    if (i > limit_) throw_domain("sieve lookup beyond limit");
    return flags_[i];
  }

  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit_; ++i) {
      if (flags_[i]) out.push_back(i);
    }
    return out;
  }

 private:
  std::uint64_t limit_;
  std::vector<bool> flags_;
};

inline SieveTable build_sieve(std::uint64_t limit) { return SieveTable(limit); }

}  // namespace primerec::oracle

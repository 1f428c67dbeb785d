#pragma once

#include <cstdint>

namespace primerec {

/// Elementary work performed by one evaluation. Callers own the counter;
/// evaluations only ever increment it.
struct OpCounter {
  std::uint64_t floor_pair_evals = 0;  // evaluations of floor(i/j) - floor((i-1)/j)
  std::uint64_t multiple_marks = 0;    // multiples visited by the windowed divisor sieve
  std::uint64_t p_evals = 0;           // prime-indicator evaluations

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace primerec

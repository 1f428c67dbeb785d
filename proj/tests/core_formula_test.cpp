#include "primerec/core_formula.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "primerec/oracle.hpp"

namespace primerec {
namespace {

// Brute force, kept local so the checks below do not lean on either module.
std::uint64_t count_divisors(std::uint64_t i) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= i; ++d) c += (i % d == 0);
  return c;
}

TEST(FloorDiv, Examples) {
  EXPECT_EQ(floor_div<Integer>(7, 3), 2);
  EXPECT_EQ(floor_div<Integer>(-1, 5), -1);
  EXPECT_EQ(floor_div<Integer>(0, 9), 0);
  EXPECT_EQ(floor_div<std::int64_t>(-1, 5), -1);
  EXPECT_EQ(floor_div<std::int64_t>(-10, 5), -2);
}

TEST(FloorDiv, RejectsNonPositiveDenominator) {
  EXPECT_THROW(floor_div<Integer>(3, 0), error);
  EXPECT_THROW(floor_div<Integer>(3, -2), error);
}

TEST(FloorDiv, FloorLawOnGrid) {
  for (int a = -100; a <= 100; ++a) {
    for (int b = 1; b <= 100; ++b) {
      const Integer q = floor_div<Integer>(a, b);
      ASSERT_LE(b * q, a) << a << "/" << b;
      ASSERT_LT(a, b * (q + 1)) << a << "/" << b;
    }
  }
}

TEST(FloorDiv, AgreesAcrossIntegerTypes) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000'000, 1'000'000'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
  for (int k = 0; k < 2000; ++k) {
    const std::int64_t a = num(rng);
    const std::int64_t b = den(rng);
    ASSERT_EQ(Integer(floor_div<std::int64_t>(a, b)), floor_div<Integer>(a, b));
  }
}

TEST(FloorDivDelta, Examples) {
  EXPECT_EQ(floor_div_delta(6, 3), Indicator::one());
  EXPECT_EQ(floor_div_delta(6, 4), Indicator::zero());
  EXPECT_EQ(floor_div_delta(1, 1), Indicator::one());
}

TEST(FloorDivDelta, DomainErrors) {
  EXPECT_THROW(floor_div_delta(0, 1), error);
  EXPECT_THROW(floor_div_delta(5, 0), error);
  EXPECT_THROW(floor_div_delta(5, 6), error);
}

TEST(FloorDivDelta, MatchesDivisibility) {
  for (std::uint64_t i = 1; i <= 2000; ++i) {
    for (std::uint64_t j = 1; j <= i; ++j) {
      ASSERT_EQ(floor_div_delta(i, j).value(), i % j == 0 ? 1 : 0) << i << "," << j;
    }
  }
}

TEST(FloorDivDelta, CountsOneFloorPair) {
  OpCounter c;
  floor_div_delta(10, 3, c);
  floor_div_delta(10, 5, c);
  EXPECT_EQ(c.floor_pair_evals, 2u);
}

TEST(DivisorCountLiteral, Examples) {
  EXPECT_EQ(divisor_count_literal(1), 1);
  EXPECT_EQ(divisor_count_literal(7), 2);
  EXPECT_EQ(divisor_count_literal(12), 6);
  EXPECT_THROW(divisor_count_literal(0), error);
}

TEST(DivisorCountLiteral, MatchesEnumeration) {
  for (std::uint64_t i = 1; i <= 5000; ++i) {
    ASSERT_EQ(divisor_count_literal(i), count_divisors(i)) << i;
  }
}

TEST(DivisorCountLiteral, CostIsOneFloorPairPerCandidate) {
  OpCounter c;
  divisor_count_literal(97, c);
  EXPECT_EQ(c.floor_pair_evals, 97u);
}

TEST(PLiteral, Examples) {
  EXPECT_EQ(p_literal(5), Indicator::zero());
  EXPECT_EQ(p_literal(9), Indicator::one());
  EXPECT_EQ(p_literal(2), Indicator::zero());
}

TEST(PLiteral, UndefinedBelowTwo) {
  EXPECT_THROW(p_literal(1), error);
  EXPECT_THROW(p_literal(0), error);
  try {
    p_literal(1);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::domain);
  }
}

TEST(PLiteral, MatchesTrialDivision) {
  for (std::uint64_t i = 2; i <= 5000; ++i) {
    ASSERT_EQ(p_literal(i) == Indicator::zero(), oracle::is_prime_trial(i)) << i;
  }
}

// Truncating division would give -trunc(-(d-2)/i) = 0 for composites as well.
TEST(PLiteral, FromDivisorCountNeedsFloorNotTruncation) {
  EXPECT_EQ(prime_indicator_from_divisor_count(12, 6), Indicator::one());
  EXPECT_EQ(prime_indicator_from_divisor_count(4, 3), Indicator::one());
  EXPECT_EQ(prime_indicator_from_divisor_count(13, 2), Indicator::zero());
  std::int64_t numer = -(6 - 2);
  EXPECT_EQ(-(numer / 12), 0);
}

TEST(FLiteral, Examples) {
  EXPECT_EQ(f_literal(1), 2);
  EXPECT_EQ(f_literal(2), 3);
  EXPECT_EQ(f_literal(7), 11);
  EXPECT_THROW(f_literal(0), error);
}

TEST(FLiteral, NextPrimeForEveryN) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    ASSERT_EQ(f_literal(n), oracle::next_prime_oracle(n)) << n;
  }
}

TEST(FLiteral, EvaluatesWholeWindow) {
  // No early exit: every i in (n, 2n] is evaluated even though 11 ends the gap.
  OpCounter c;
  EXPECT_EQ(f_literal(7, c), 11);
  EXPECT_EQ(c.p_evals, 7u);
  EXPECT_EQ(c.floor_pair_evals, 8u + 9 + 10 + 11 + 12 + 13 + 14);
}

TEST(Nat, RejectsNegative) {
  EXPECT_THROW(Nat(-1), error);
  EXPECT_THROW(Nat(Integer(-5)), error);
  EXPECT_EQ(Nat::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(Nat::parse("12a"), error);
  EXPECT_THROW(Nat::parse(""), error);
  EXPECT_THROW(Nat::parse("-3"), error);
}

TEST(Nat, SubtractionLeavesTheType) {
  const Integer diff = Nat(3) - Nat(5);
  EXPECT_EQ(diff, -2);
}

TEST(Indicator, OnlyZeroOrOne) {
  EXPECT_EQ(Indicator::from(0), Indicator::zero());
  EXPECT_EQ(Indicator::from(1), Indicator::one());
  EXPECT_THROW(Indicator::from(2), error);
  EXPECT_THROW(Indicator::from(-1), error);
}

}  // namespace
}  // namespace primerec

#include <gtest/gtest.h>

#include <numeric>

#include "dioph/number_theory.hpp"
#include "dioph/singular_series.hpp"

using namespace dioph;

namespace {

// Direct products over odd prime divisors found by trial division.
ExactRational odd_prime_product(std::uint64_t n, long a_off, long b_off) {
  ExactRational r(1);
  for (std::uint64_t p = 3; p <= n; p += 2) {
    if (n % p != 0) continue;
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
      if (p % d == 0) prime = false;
    }
    if (prime) r *= ExactRational(static_cast<long>(p) + a_off, static_cast<long>(p) + b_off);
  }
  return r;
}

}  // namespace

TEST(SigmaPrime, Examples) {
  EXPECT_EQ(sigma_prime(1).exact, ExactRational(1));
  for (std::uint64_t k = 0; k < 20; ++k) EXPECT_EQ(sigma_prime(std::uint64_t{1} << k).exact, ExactRational(1));
  EXPECT_EQ(sigma_prime(15).exact, ExactRational(8, 3));
}

TEST(SigmaDoublePrime, Examples) {
  EXPECT_EQ(sigma_double_prime(1).exact, ExactRational(1));
  EXPECT_EQ(sigma_double_prime(2).exact, ExactRational(1));
  EXPECT_EQ(sigma_double_prime(15).exact, ExactRational(8, 5));
  EXPECT_EQ(sigma_double_prime(31).exact, ExactRational(32, 31));
}

TEST(SingularSeries, AgreesWithTrialDivisionProducts) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    EXPECT_EQ(sigma_prime(n).exact, odd_prime_product(n, -1, -2)) << n;
    EXPECT_EQ(sigma_double_prime(n).exact, odd_prime_product(n, 1, 0)) << n;
  }
}

TEST(SingularSeries, DecimalMatchesExact) {
  const auto v = sigma_prime(9699690, 40);
  EXPECT_LT(abs(v.decimal - HPReal::from_rational(v.exact, 40)), HPReal::parse("1e-38"));
  EXPECT_EQ(v.decimal.digits(), 40u);
}

TEST(SingularSeries, MultiplicativeOnCoprimePairs) {
  for (std::uint64_t m = 1; m <= 300; ++m) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      const auto dpp = sigma_double_prime(m * n).exact;
      if (std::gcd(m, n) == 1) {
        EXPECT_EQ(sigma_prime(m * n).exact, sigma_prime(m).exact * sigma_prime(n).exact);
        EXPECT_EQ(dpp, sigma_double_prime(m).exact * sigma_double_prime(n).exact);
      }
      EXPECT_LE(dpp, sigma_double_prime(m).exact * sigma_double_prime(n).exact);
    }
  }
}

TEST(SigmaMinus, Examples) {
  EXPECT_EQ(sigma_minus(24).exact, ExactRational(52, 27));
  EXPECT_EQ(sigma_minus(48).exact, ExactRational(58, 27));
  EXPECT_EQ(sigma_minus(-24).exact, ExactRational(52, 27));
  EXPECT_THROW(sigma_minus(12), std::domain_error);
  EXPECT_THROW(sigma_minus(0), std::domain_error);
  EXPECT_THROW(sigma_minus(36), std::domain_error);
}

TEST(SigmaMinus, AtMostTwiceSigmaDoublePrime) {
  for (std::int64_t n = 24; n <= 10'000; n += 24) {
    const auto minus = sigma_minus(n).exact;
    EXPECT_GT(minus, ExactRational(0));
    EXPECT_LE(minus, ExactRational(2) * sigma_double_prime(static_cast<std::uint64_t>(n)).exact) << n;
  }
}

TEST(C0Partial, SmallLimits) {
  EXPECT_EQ(c0_partial(3, 40), HPReal::parse("0.75", 40));
  EXPECT_LT(abs(c0_partial(7, 40) - HPReal::from_rational(ExactRational(175, 256), 40)), HPReal::parse("1e-38"));
  EXPECT_THROW(c0_partial(2), std::domain_error);
}

TEST(C0Partial, NonincreasingAndAboveFloor) {
  HPReal prev = c0_partial(3, 30);
  for (std::uint64_t limit : {10, 100, 1000, 10'000, 100'000, 1'000'000}) {
    const HPReal v = c0_partial(limit, 30);
    EXPECT_LE(v, prev);
    EXPECT_GT(v, HPReal::parse("0.66", 30));
    prev = v;
  }
  EXPECT_LT(abs(prev - c0_midpoint(30)), HPReal::parse("1e-6", 30));
}

TEST(TotientBound, CrossoverAtFourteen) {
  EXPECT_GT(bound_rosser_schoenfeld(13), two_log_2n(13));
  EXPECT_LT(bound_rosser_schoenfeld(14), two_log_2n(14));
  EXPECT_NEAR(bound_rosser_schoenfeld(14).to_double(), 6.530, 1e-3);
  EXPECT_NEAR(two_log_2n(14).to_double(), 6.664, 1e-3);
  EXPECT_THROW(bound_rosser_schoenfeld(2), std::domain_error);
}

TEST(TotientBound, ChainAtOneMillion) {
  const std::uint64_t n = 1'000'000;
  EXPECT_LE(sigma_prime(n).decimal, totient_ratio_bound(n));
  EXPECT_LE(totient_ratio_bound(n), bound_rosser_schoenfeld(n));
}

TEST(SolePlanatBound, SolePlanatExamples) {
  EXPECT_NEAR(bound_sole_planat(31).to_double(), 2.197, 1e-3);
  EXPECT_LT(sigma_double_prime(31).decimal, bound_sole_planat(31));
  const ExactRational primorial = ExactRational(4, 3) * ExactRational(6, 5) * ExactRational(8, 7) *
                                  ExactRational(12, 11) * ExactRational(14, 13);
  EXPECT_EQ(sigma_double_prime(30030).exact, primorial);
  EXPECT_LT(sigma_double_prime(30030).decimal, bound_sole_planat(30030));
  EXPECT_THROW(bound_sole_planat(30), std::domain_error);
}

TEST(SolePlanatBound, HoldsOnScan) {
  for (std::uint64_t n = 31; n <= 20'000; ++n) {
    EXPECT_LT(sigma_double_prime(n, 30).decimal, bound_sole_planat(n, 30)) << n;
  }
}

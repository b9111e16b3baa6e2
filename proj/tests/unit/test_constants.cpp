#include <gtest/gtest.h>

#include "dioph/constants.hpp"
#include "dioph/number_theory.hpp"
#include "dioph/singular_series.hpp"

using namespace dioph;

namespace {

HPReal rel_diff(const HPReal& a, const HPReal& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST(Constants, LiteralsAreVerbatim) {
  EXPECT_EQ(constant_C().value.to_string(12), "10.021916834");
  EXPECT_EQ(constant_C().value, HPReal::parse("10.0219168340"));
  EXPECT_EQ(constant_C().provenance, Provenance::paper_literal);
  EXPECT_GT(constant_C().value, 10);
  EXPECT_LT(constant_C().value, HPReal::parse("10.1"));
  EXPECT_EQ(constant_D().value, HPReal::parse("17646979.6536361512"));
  EXPECT_EQ(constant_D().provenance, Provenance::paper_literal);
  EXPECT_EQ(constant_nu().value, HPReal::parse("0.8844472132"));
  // the rounded 0.122787 is only good to about 5e-6
  EXPECT_NEAR((-log(constant_nu().value)).to_double(), 0.1227924469823, 1e-12);
  EXPECT_NEAR((-log(constant_nu().value)).to_double(), 0.122787, 1e-5);
}

TEST(Constants, C4) {
  EXPECT_EQ(kC4, 105906176u);
  EXPECT_EQ(kC4 % (1u << 20), 0u);
  EXPECT_EQ(kC4 / 101, 1048576u);
  EXPECT_EQ(constant_c4().value, HPReal(105906176));
}

TEST(Constants, D1MatchesLiteral) {
  const auto d1 = constant_D1();
  EXPECT_LT(rel_diff(d1.value, HPReal::parse(kLiteralD1)), HPReal::parse("1e-19"));
  EXPECT_NEAR(d1.value.to_double(), 1.587e9, 1e7);
}

TEST(Constants, DRatioToD1) {
  EXPECT_LT(constant_D().value / constant_D1().value, HPReal::parse("0.0112"));
}

// The published D is c4 * 1.620767 * pi^2 / 96 to all printed digits.
TEST(Constants, PublishedDUsesTheC5BoundExactly) {
  EXPECT_LT(abs(constant_D_from_c5_bound() - constant_D().value), HPReal::parse("1e-10"));
}

TEST(C5, SmallPartialSums) {
  EXPECT_EQ(c5_partial_sum_exact(1), ExactRational(1));
  const ExactRational seven = ExactRational(1) + ExactRational(1, 6) + ExactRational(1, 20) + ExactRational(1, 21);
  EXPECT_EQ(c5_partial_sum_exact(7), seven);
  EXPECT_NEAR(c5_partial_sum(7).to_double(), 1.264286, 1e-6);
  // 9 is not squarefree, so nothing changes until 11.
  EXPECT_EQ(c5_partial_sum_exact(10), seven);
}

TEST(C5, TermsAreOddSquarefreeWithTheirOrder) {
  const auto terms = c5_terms(2000);
  std::uint64_t prev = 0;
  for (const auto& t : terms) {
    EXPECT_GT(t.d, prev);
    prev = t.d;
    EXPECT_EQ(t.d % 2, 1u);
    EXPECT_NE(mobius(t.d), 0);
    EXPECT_EQ(t.order, mult_order_2(t.d));
  }
}

TEST(C5, MonotoneBelowBoundWithShrinkingDecades) {
  const HPReal bound = HPReal::parse(kLiteralC5Bound);
  HPReal prev_sum = c5_partial_sum(10);
  HPReal prev_inc(1000);
  for (std::uint64_t d : {100, 1000, 10'000, 100'000}) {
    const HPReal s = c5_partial_sum(d);
    EXPECT_LT(s, bound);
    EXPECT_GT(s, prev_sum);
    const HPReal inc = s - prev_sum;
    EXPECT_LT(inc, prev_inc) << d;
    prev_inc = inc;
    prev_sum = s;
  }
  EXPECT_NEAR(prev_sum.to_double(), 1.379681, 1e-6);
}

TEST(ConstantD, RecomputedStaysBelowPublished) {
  const auto rec = constant_D(DMode::recomputed(100'000));
  EXPECT_EQ(rec.provenance, Provenance::computed_with_crosscheck);
  EXPECT_LE(rec.value, constant_D().value * (1 + HPReal::parse("1e-4")));
  // c5 partial sums converge near 1.380, so the gap to the 1.620767-based
  // value is about 15% and does not close with d_max.
  EXPECT_NEAR((rec.value / constant_D().value).to_double(), 0.8513, 1e-4);
}

TEST(CapitalC, PublishedExampleScale) {
  const HPReal eps = HPReal::parse("1e-20");
  const HPReal c = capital_C(1, 1, 1, eps);
  EXPECT_LT(abs(c - HPReal::parse("13750.946214731299412820662328465")), HPReal::parse("1e-25"));
}

TEST(CapitalC, MonotoneAndLinearInEps) {
  const HPReal eps = HPReal::parse("0.01");
  HPReal prev(0);
  for (std::uint64_t q : {1, 3, 15, 105, 1155}) {
    const HPReal c = capital_C(q, 1, 1, eps);
    EXPECT_GE(c, prev);
    prev = c;
  }
  const HPReal a = capital_C(7, 11, 13, eps);
  const HPReal b = capital_C(7, 11, 13, 2 * eps);
  EXPECT_LT(abs(b / a - (1 + 2 * eps) / (1 + eps)), HPReal::parse("1e-45"));
  const HPReal log2 = HPReal::log2();
  EXPECT_GE(capital_C(2, 2, 2, eps), (1 + eps) * sqrt(log2) * log2);
}

TEST(Constants, RejectLowPrecision) {
  EXPECT_THROW(constant_C(20), std::invalid_argument);
  EXPECT_NO_THROW(constant_C(30));
  const auto all = all_named_constants();
  EXPECT_EQ(all.size(), 7u);
  EXPECT_EQ(to_string(Provenance::computed_with_crosscheck), "computed-with-paper-crosscheck");
}

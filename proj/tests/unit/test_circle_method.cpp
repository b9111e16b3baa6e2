#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dioph/circle_method.hpp"
#include "dioph/number_theory.hpp"
#include "dioph/search.hpp"

using namespace dioph;

namespace {

FormCoefficients unit_form(double eta) {
  FormCoefficients f;
  f.lambda = {-1.0, 1.0, 1.0};
  f.eta = eta;
  return f;
}

FormCoefficients published_form(double eta) {
  FormCoefficients f;
  f.lambda = {-std::sqrt(5.0), std::sqrt(3.0), std::sqrt(2.0)};
  f.eta = eta;
  return f;
}

// Rational test system with period 4: lambda = (-1, 1/2, 3/4), mu_1 = 1, eta = 5/4.
FormCoefficients rational_form() {
  FormCoefficients f;
  f.lambda = {-1.0, 0.5, 0.75};
  f.mu = {1.0};
  f.eta = 1.25;
  return f;
}

// 2D midpoint grid over (t2, t3) with a midpoint sum over u1 restricted to the
// tent's support; shares nothing with the closed-form evaluator.
double script_J_grid(double u, const FormCoefficients& f, double X, double eps, int n, int inner) {
  const double a = -f.lambda[0];
  const double t_lo = std::sqrt(eps * X), t_hi = std::sqrt(X);
  const double dt = (t_hi - t_lo) / n;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t2 = t_lo + (i + 0.5) * dt;
    for (int j = 0; j < n; ++j) {
      const double t3 = t_lo + (j + 0.5) * dt;
      const double c = f.lambda[1] * t2 * t2 + f.lambda[2] * t3 * t3 + u;
      // tent centred where a u1 = c
      const double lo = std::max(eps * X, (c - f.eta) / a);
      const double hi = std::min(X, (c + f.eta) / a);
      if (hi <= lo) continue;
      const double du = (hi - lo) / inner;
      double s = 0.0;
      for (int k = 0; k < inner; ++k) s += k_hat(c - a * (lo + (k + 0.5) * du), f.eta);
      total += s * du;
    }
  }
  return total * dt * dt;
}

double selberg_grid(double X, double h, double eps, double step, bool squares) {
  const ThetaTable table(static_cast<std::uint64_t>(X + h) + 2);
  long double acc = 0.0L;
  const double lo = eps * X;
  const auto n = static_cast<std::uint64_t>(std::ceil((X - lo) / step));
  const double dx = (X - lo) / static_cast<double>(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = lo + (static_cast<double>(i) + 0.5) * dx;
    double d;
    if (squares) {
      d = table(std::sqrt(x + h)) - table(std::sqrt(x)) - (std::sqrt(x + h) - std::sqrt(x));
    } else {
      d = table(x + h) - table(x) - h;
    }
    acc += static_cast<long double>(d) * d;
  }
  return static_cast<double>(acc * dx);
}

}  // namespace

TEST(Dissect, BoundaryAtTenThousand) {
  const auto ctx = make_sum_context_with_L(1e4, 0.1, 8);
  const auto d = dissect(1e4, ctx);
  EXPECT_NEAR(d.P, std::pow(10.0, 1.6) / std::log(1e4), 1e-12);
  EXPECT_NEAR(d.P, 4.322, 1e-3);
  EXPECT_NEAR(d.major_bound, 4.322e-4, 1e-7);
  EXPECT_EQ(d.minor_bound, 64.0);
}

TEST(Dissect, RegionsPartitionTheLine) {
  const auto ctx = make_sum_context_with_L(1e4, 0.1, 8);
  const auto d = dissect(1e4, ctx);
  const double A = 200.0;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-A, A);
  std::exponential_distribution<double> small(2000.0);
  auto inside = [](const std::vector<Interval>& r, double a) {
    int n = 0;
    for (const auto& iv : r) n += (a >= iv.lo && a <= iv.hi);
    return n;
  };
  for (int i = 0; i < 100'000; ++i) {
    const double a = (i % 2) ? u(rng) : (i % 4 ? 1 : -1) * small(rng);
    const int hits = inside(d.major(), a) + inside(d.minor(), a) + inside(d.trivial(A), a);
    EXPECT_EQ(hits, 1) << a;
    const Arc arc = d.classify(a);
    EXPECT_EQ(inside(arc == Arc::major ? d.major() : arc == Arc::minor ? d.minor() : d.trivial(A), a), 1);
  }
}

TEST(Dissect, BoundaryDecreasesInX) {
  double prev = 1.0;
  for (double X = 1e3; X <= 1e9; X *= 3.0) {
    const auto d = dissect(X, make_sum_context_with_L(std::min(X, 1e4), 0.1, 4));
    EXPECT_LT(d.major_bound, prev);
    EXPECT_NEAR(d.major_bound, std::pow(X, -0.6) / std::log(X), 1e-15);
    prev = d.major_bound;
  }
  SumContext bad;
  EXPECT_THROW(dissect(1e4, bad), std::domain_error);
}

TEST(ContinuousSums, ValuesAtZero) {
  const auto ctx = make_sum_context_with_L(1e4, 0.1, 4);
  EXPECT_NEAR(eval_T1(0.0, ctx).real(), 9000.0, 1e-9);
  EXPECT_NEAR(eval_T2(0.0, ctx).real(), 100.0 - std::sqrt(1000.0), 1e-9);
  EXPECT_NEAR(eval_U1(0.0, ctx).real(), 9001.0, 0.0);
  EXPECT_NEAR(eval_U2(0.0, ctx).real(), 100.0 - 31.0, 0.0);
  const Complex half = eval_U1(0.5, ctx);
  EXPECT_NEAR(std::abs(half), 1.0, 1e-9);
  EXPECT_NEAR(std::abs(half.real() - std::round(half.real())), 0.0, 1e-9);
}

TEST(ContinuousSums, T1ClosedFormAgainstQuadrature) {
  const auto ctx = make_sum_context_with_L(1000, 0.1, 4);
  for (double a : {1e-4, 3.3e-3, 0.0217}) {
    const int n = 400'000;
    const double h = 900.0 / n;
    std::complex<long double> acc{0, 0};
    for (int i = 0; i < n; ++i) {
      const long double t = 100.0L + (i + 0.5L) * h;
      const long double ang = 2.0L * std::numbers::pi_v<long double> * t * a;
      acc += std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    const Complex v = eval_T1(a, ctx);
    EXPECT_NEAR(v.real(), static_cast<double>(acc.real() * h), 1e-5);
    EXPECT_NEAR(v.imag(), static_cast<double>(acc.imag() * h), 1e-5);
  }
}

TEST(ContinuousSums, EnvelopesAndDiscreteComparison) {
  for (double X : {1e3, 1e4}) {
    const auto ctx = make_sum_context_with_L(X, 0.1, 4);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> lu(-6.0, 0.5);
    for (int i = 0; i < 200; ++i) {
      double a = std::pow(10.0, lu(rng));
      if (i % 2) a = -a;
      EXPECT_LE(std::abs(eval_T1(a, ctx)), std::min(0.9 * X, 1.0 / (std::numbers::pi * std::abs(a))) * (1 + 1e-9));
      EXPECT_LE(std::abs(eval_T2(a, ctx)), std::pow(X, -0.5) * std::min(X, 1.0 / std::abs(a)));
      EXPECT_LE(std::abs(eval_T1(a, ctx) - eval_U1(a, ctx)), 10.0 * (1 + X * std::abs(a)));
      EXPECT_LE(std::abs(eval_T2(a, ctx) - eval_U2(a, ctx)), 10.0 * (1 + X * std::abs(a)));
    }
  }
}

TEST(Integrand, ZeroAndConjugateSymmetry) {
  const auto ctx = make_sum_context_with_L(400, 0.04, 3);
  const auto f = rational_form();
  const Complex z = integrand(0.0, f, ctx);
  const double expect = eval_S1(0.0, ctx).real() * std::pow(eval_S2(0.0, ctx).real(), 2) * 3.0 * 1.25 * 1.25;
  EXPECT_NEAR(z.real(), expect, 1e-9 * expect);
  EXPECT_EQ(z.imag(), 0.0);
  EXPECT_NEAR(sum_product_envelope(f, ctx) * 1.25 * 1.25, expect, 1e-9 * expect);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng);
    EXPECT_LT(std::abs(integrand(-a, f, ctx) - std::conj(integrand(a, f, ctx))), 1e-9 * expect);
  }
}

TEST(Integrate, KernelTransformIsTheTent) {
  for (double t : {0.0, 0.5, -0.5, 1.5, -1.5}) {
    QuadratureSpec q;
    q.truncation_A = 1000.0;
    const auto r = kernel_transform(t, 1.0, q);
    EXPECT_NEAR(r.tail_bound, 2.0 / (std::numbers::pi * std::numbers::pi * 1000.0), 1e-18);
    EXPECT_LE(std::abs(r.value.real() - k_hat(t, 1.0)), r.tail_bound + r.panel_error) << t;
    EXPECT_FALSE(r.budget_exceeded);
  }
}

TEST(Integrate, MasterIdentityAgainstEnumeration) {
  RawSystem raw;
  raw.lambda = {"-1", "1/2", "3/4"};
  raw.ratio = {"-1", "1", "1"};
  raw.eta = "5/4";
  raw.eps = "0.04";
  raw.ratio_irrational = false;
  const auto sys = validate_system(raw);
  SearchParams sp;
  sp.X = 400;
  sp.range_eps = 0.04;
  const auto count = count_solutions(sys, sp);
  ASSERT_EQ(count.L, 3);
  ASSERT_GT(count.count, 0u);

  const auto ctx = make_sum_context_with_L(400, 0.04, count.L);
  const auto f = sys.form(1);
  double prev_err = 1e300;
  for (double A : {1e2, 1e4}) {
    QuadratureSpec q;
    q.truncation_A = A;
    q.rule = QuadratureRule::periodic_fold;
    q.period = 4.0;
    const auto r = integrate_line(f, ctx, q);
    const double err = std::abs(r.value.real() - count.weighted_sum);
    EXPECT_LE(err, r.tail_bound + r.panel_error + 1e-9 * count.weighted_sum) << A;
    EXPECT_LT(err, prev_err);
    prev_err = err;
  }
  EXPECT_LT(prev_err, 1e-6);
}

TEST(Integrate, PeriodicFoldRejectsNonPeriodicInput) {
  const auto ctx = make_sum_context_with_L(400, 0.04, 3);
  auto f = rational_form();
  f.lambda[1] = std::sqrt(2.0);
  QuadratureSpec q;
  q.rule = QuadratureRule::periodic_fold;
  q.period = 4.0;
  EXPECT_THROW(integrate_line(f, ctx, q), std::invalid_argument);
  f = rational_form();
  f.eta = 1.1;
  EXPECT_THROW(integrate_line(f, ctx, q), std::invalid_argument);
}

TEST(Integrate, RegionAdditivityAndTrivialArc) {
  const auto ctx = make_sum_context_with_L(400, 0.04, 2);
  const auto f = rational_form();
  const auto d = dissect(400, ctx);
  QuadratureSpec q;
  q.truncation_A = 6.0;
  q.workers = 4;
  const auto major = integrate_region(d.major(), f, ctx, q);
  const auto minor = integrate_region(d.minor(), f, ctx, q);
  const auto trivial = integrate_region(d.trivial(q.truncation_A), f, ctx, q);
  const auto whole = integrate_region({{-q.truncation_A, q.truncation_A}}, f, ctx, q);
  const Complex sum = major.value + minor.value + trivial.value;
  const double err = major.panel_error + minor.panel_error + trivial.panel_error + whole.panel_error;
  EXPECT_LE(std::abs(sum - whole.value), err + 1e-9 * std::abs(whole.value));
  EXPECT_LE(std::abs(trivial.value), trivial_arc_envelope(f, ctx, q.truncation_A, q));
}

TEST(Integrate, BudgetIsFlagged) {
  const auto ctx = make_sum_context_with_L(400, 0.04, 3);
  QuadratureSpec q;
  q.truncation_A = 50.0;
  q.panel_budget = 100;
  const auto r = integrate_line(rational_form(), ctx, q);
  EXPECT_TRUE(r.budget_exceeded);
  EXPECT_LE(r.panels, 150u);
}

TEST(ScriptJ, SupportAndLowerBound) {
  for (const auto& f : {unit_form(0.1), published_form(0.1)}) {
    const double X = 1e3;
    const auto ctx = make_sum_context_with_L(X, 0.1, 1);
    const double reach = f.eta + (std::abs(f.lambda[0]) + f.lambda[1] + f.lambda[2]) * X;
    EXPECT_EQ(script_J(reach * 1.01, f, ctx), 0.0);
    EXPECT_EQ(script_J(-reach * 1.01, f, ctx), 0.0);
    for (double u : {0.0, 0.05 * X, -0.05 * X}) {
      EXPECT_GE(script_J(u, f, ctx), script_J_lower_bound(f, X));
    }
  }
  auto bad = unit_form(0.1);
  bad.lambda[1] = -1.0;
  EXPECT_THROW(script_J(0.0, bad, make_sum_context_with_L(1e3, 0.1, 1)), std::domain_error);
}

TEST(ScriptJ, ResolutionsAgree) {
  const auto ctx = make_sum_context_with_L(1e4, 0.1, 1);
  ScriptJOptions coarse, fine;
  coarse.outer_panels = 4;
  fine.outer_panels = 64;
  const double a = script_J(0.0, unit_form(0.1), ctx, coarse);
  const double b = script_J(0.0, unit_form(0.1), ctx, fine);
  EXPECT_NEAR(a, b, 0.005 * b);
  EXPECT_NEAR(b, 26.3647609, 1e-6);
}

TEST(ScriptJ, AgreesWithGridOracle) {
  const double X = 1e3;
  const auto ctx = make_sum_context_with_L(X, 0.1, 1);
  for (const auto& f : {unit_form(0.1), published_form(0.1)}) {
    for (double u : {0.0, 50.0}) {
      const double exact = script_J(u, f, ctx);
      const double grid = script_J_grid(u, f, X, 0.1, 400, 40);
      EXPECT_NEAR(exact, grid, 0.01 * exact) << u;
    }
  }
}

TEST(Selberg, NonnegativeAndMatchesGrid) {
  const double X = 1e4, h = 1e3;
  const double J = selberg_J(X, h, 0.1);
  const double Js = selberg_Jstar(X, h, 0.1);
  EXPECT_GT(J, 0.0);
  EXPECT_GT(Js, 0.0);
  EXPECT_NEAR(J, selberg_grid(X, h, 0.1, 0.01, false), 1e-3 * J);
  EXPECT_NEAR(Js, selberg_grid(X, h, 0.1, 0.01, true), 1e-3 * Js);
  EXPECT_THROW(selberg_J(100, 0, 0.1), std::domain_error);
  EXPECT_THROW(selberg_J(100, 101, 0.1), std::domain_error);
}

TEST(Selberg, NormalizedDecay) {
  double prev = 1e300;
  for (double X : {1e4, 1e5, 1e6}) {
    const double h = std::pow(X, 0.7);
    const double r = selberg_J(X, h, 0.1) / (h * h * X);
    EXPECT_LE(r, prev);
    prev = r;
  }
}

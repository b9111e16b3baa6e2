#pragma once

#include <cstdint>
#include <vector>

#include "dioph/exp_sums.hpp"
#include "dioph/system.hpp"

namespace dioph {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

enum class Arc { major, minor, trivial };

/// Major arc |alpha| <= P/X, minor arc P/X < |alpha| <= L^2, trivial arc
/// beyond, with P = X^{2/5} / log X.
struct ArcDissection {
  double X = 0.0;
  double P = 0.0;
  double major_bound = 0.0;  // P / X
  double minor_bound = 0.0;  // L^2
  int L = 0;

  Arc classify(double alpha) const;
  std::vector<Interval> major() const;
  std::vector<Interval> minor() const;
  /// Trivial arc cut off at |alpha| <= A (empty when A <= L^2).
  std::vector<Interval> trivial(double A) const;
};

/// Throws std::domain_error when L < 1 or the arcs degenerate (P/X >= L^2).
ArcDissection dissect(double X, const SumContext& ctx);

/// T1(alpha) = integral over [eps X, X] of e(t alpha) dt, in closed form.
Complex eval_T1(double alpha, const SumContext& ctx);
/// T2(alpha) = integral over [sqrt(eps X), sqrt X] of e(t^2 alpha) dt.
Complex eval_T2(double alpha, const SumContext& ctx);
/// U1(alpha) = sum over integers eps X <= n <= X of e(alpha n) (geometric closed form).
Complex eval_U1(double alpha, const SumContext& ctx);
/// U2(alpha) = sum over integers eps X <= n^2 <= X of e(alpha n^2).
Complex eval_U2(double alpha, const SumContext& ctx);

/// S1(l1 a) S2(l2 a) S2(l3 a) G(m1 a) ... G(ms a) e(varpi a), i.e. the
/// integrand without the kernel.
Complex form_sum_product(double alpha, const FormCoefficients& form, const SumContext& ctx);

/// The full integrand: form_sum_product times K(alpha, eta).
Complex integrand(double alpha, const FormCoefficients& form, const SumContext& ctx);

/// Largest frequency (cycles per unit alpha) present in the integrand.
double integrand_bandwidth(const FormCoefficients& form, const SumContext& ctx);

enum class QuadratureRule {
  /// Composite 20-point Gauss-Legendre panels sized to the bandwidth.
  gauss_panels,
  /// Fold |alpha| <= A onto one period of a rational system's sum product;
  /// the truncated kernel sum is closed form (trigamma).
  periodic_fold,
};

struct QuadratureSpec {
  double truncation_A = 100.0;
  QuadratureRule rule = QuadratureRule::gauss_panels;
  /// Panels per unit length per cycle of bandwidth.
  double panels_per_cycle = 1.0;
  /// periodic_fold only: period of form_sum_product; eta * period must be an integer.
  double period = 0.0;
  std::uint64_t panel_budget = 20'000'000;
  unsigned workers = 1;
};

struct RegionIntegral {
  Complex value{0.0, 0.0};
  /// |Q(2n) - Q(n)|: difference between the panel count and its doubling.
  double panel_error = 0.0;
  /// Bound on the part of the line beyond the truncation (line integrals only).
  double tail_bound = 0.0;
  /// The truncation actually used (periodic_fold rounds A to (N + 1/2) period).
  double truncation_A = 0.0;
  std::uint64_t panels = 0;
  bool budget_exceeded = false;
};

/// Integral of the integrand over a union of intervals.
RegionIntegral integrate_region(const std::vector<Interval>& region, const FormCoefficients& form, const SumContext& ctx,
                                const QuadratureSpec& quad);

/// Integral over |alpha| <= A with the tail bound
/// L^s S1(0) S2(0)^2 * 2 / (pi^2 A).
RegionIntegral integrate_line(const FormCoefficients& form, const SumContext& ctx, const QuadratureSpec& quad);

/// Integral of K(alpha, eta) e(t alpha) over |alpha| <= A with the same panel
/// rule; tail_bound is 2 / (pi^2 A).
RegionIntegral kernel_transform(double t, double eta, const QuadratureSpec& quad);

/// sup |form_sum_product| = L^s S1(0) S2(0)^2.
double sum_product_envelope(const FormCoefficients& form, const SumContext& ctx);

/// L^s times the integral of |S1 S2 S2| / (pi^2 alpha^2) over L^2 <= |alpha| <= A:
/// an upper bound for the truncated trivial-arc integral.
double trivial_arc_envelope(const FormCoefficients& form, const SumContext& ctx, double A, const QuadratureSpec& quad);

struct ScriptJOptions {
  /// Gauss-Legendre panels per smooth piece of the outer integral.
  unsigned outer_panels = 16;
};

/// The continuous major-arc integral
///   J(u, eta) = 1/4 iiint khat(l1 u1 + l2 u2 + l3 u3 + u, eta) (u2 u3)^{-1/2}
/// over [eps X, X]^3. Requires lambda_1 < 0 < lambda_2, lambda_3.
/// The u1 integral is exact (piecewise quadratic), the u3 integral is split at
/// every kink and therefore exact up to rounding, the u2 integral uses panels.
double script_J(double u, const FormCoefficients& form, const SumContext& ctx, const ScriptJOptions& opts = {});

/// (3 - 2 sqrt 2) eta^2 X / (4 (|l1| + l2 + l3)).
double script_J_lower_bound(const FormCoefficients& form, double X);

/// J(X, h) = integral over [eps X, X] of (theta(x + h) - theta(x) - h)^2 dx,
/// summed exactly over the intervals between prime jumps.
double selberg_J(double X, double h, double eps);

/// J*(X, h) with theta(sqrt(x + h)) - theta(sqrt x) - (sqrt(x + h) - sqrt x);
/// piecewise smooth between jumps at p^2 and p^2 - h.
double selberg_Jstar(double X, double h, double eps);

}  // namespace dioph

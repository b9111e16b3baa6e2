#include "dioph/circle_method.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dioph/number_theory.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kPanelChunks = 64;

using Rule20 = boost::math::quadrature::gauss<double, 20>;
using Rule10 = boost::math::quadrature::gauss<double, 10>;

// sin(pi y) with y reduced mod 2 first, so large arguments keep their accuracy.
double sin_pi(long double y) {
  const long double r = y - 2.0L * std::floor(y / 2.0L);
  return static_cast<double>(std::sin(3.141592653589793238462643383279502884L * r));
}

// Composite Gauss-Legendre rule (even N, no centre node) with n equal panels.
template <typename Rule, typename T, typename F>
T gauss_sum(F&& f, double lo, double hi, std::uint64_t n, unsigned workers) {
  if (n == 0 || !(hi > lo)) return T{};
  const double width = (hi - lo) / static_cast<double>(n);
  const double half = 0.5 * width;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const auto parts = map_chunks<T>(split_range(n, kPanelChunks), workers, [&](std::size_t, IndexRange r) {
    T acc{};
    for (std::uint64_t j = r.begin; j < r.end; ++j) {
      const double mid = lo + (static_cast<double>(j) + 0.5) * width;
      T panel{};
      for (std::size_t k = 0; k < x.size(); ++k) {
        panel += w[k] * (f(mid - half * x[k]) + f(mid + half * x[k]));
      }
      acc += half * panel;
    }
    return acc;
  });
  T total{};
  for (const auto& p : parts) total += p;
  return total;
}

// Local (non-parallel) Gauss-Legendre on one piece.
template <typename F>
double gauss_piece(F&& f, double lo, double hi, std::uint64_t panels) {
  return gauss_sum<Rule10, double>(f, lo, hi, panels, 1);
}

struct PanelResult {
  Complex value;
  double error = 0.0;
  std::uint64_t panels = 0;
  bool budget_exceeded = false;
};

// Q(2n) with |Q(2n) - Q(n)| as the error estimate.
template <typename F>
PanelResult doubled_panels(F&& f, double lo, double hi, std::uint64_t n, std::uint64_t budget, unsigned workers) {
  PanelResult out;
  n = std::max<std::uint64_t>(n, 2);
  if (2 * n > budget) {
    n = std::max<std::uint64_t>(1, budget / 2);
    out.budget_exceeded = true;
  }
  const Complex coarse = gauss_sum<Rule20, Complex>(f, lo, hi, n, workers);
  out.value = gauss_sum<Rule20, Complex>(f, lo, hi, 2 * n, workers);
  out.error = std::abs(out.value - coarse);
  out.panels = 3 * n;
  return out;
}

std::uint64_t panels_for(double length, double bandwidth, double per_cycle) {
  const double n = std::ceil(length * std::max(bandwidth, 1.0) * std::max(per_cycle, 1e-3));
  if (n > 1e15) return std::numeric_limits<std::uint64_t>::max() / 4;
  return std::max<std::uint64_t>(2, static_cast<std::uint64_t>(n));
}

double max_or_zero(const std::vector<std::uint64_t>& v) { return v.empty() ? 0.0 : static_cast<double>(v.back()); }

bool near_integer(double x) { return std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x)); }

void check_period(const FormCoefficients& form, double Q) {
  if (!(Q > 0.0)) throw std::invalid_argument("periodic_fold: period must be positive");
  auto check = [&](double c, const char* what) {
    if (!near_integer(c * Q)) throw std::invalid_argument(std::string("periodic_fold: ") + what + " times the period is not an integer");
  };
  for (double l : form.lambda) check(l, "lambda");
  for (double m : form.mu) check(m, "mu");
  check(form.varpi, "varpi");
  check(form.eta, "eta");
}

// sum_{n=-N}^{N} K(alpha + n Q) for |alpha| <= Q/2, valid when eta Q is an integer.
double folded_kernel(double alpha, double eta, double Q, std::uint64_t N) {
  double k = fejer_K(alpha, eta);
  if (N == 0) return k;
  using boost::math::trigamma;
  const double x = alpha / Q;
  const double n1 = static_cast<double>(N) + 1.0;
  const double series = trigamma(1.0 + x) - trigamma(n1 + x) + trigamma(1.0 - x) - trigamma(n1 - x);
  const double s = std::sin(kPi * eta * alpha);
  return k + s * s * series / (kPi * kPi * Q * Q);
}

void check_canonical(const FormCoefficients& form) {
  if (!(form.lambda[0] < 0.0 && form.lambda[1] > 0.0 && form.lambda[2] > 0.0)) {
    throw std::domain_error("script_J: needs lambda_1 < 0 < lambda_2, lambda_3");
  }
  if (!(form.eta > 0.0)) throw std::domain_error("script_J: eta must be positive");
}

// Integral of the tent max(0, eta - |v|) over (-inf, v].
double tent_cdf(double v, double eta) {
  if (v <= -eta) return 0.0;
  if (v <= 0.0) return 0.5 * (v + eta) * (v + eta);
  if (v < eta) return eta * eta - 0.5 * (eta - v) * (eta - v);
  return eta * eta;
}

void check_selberg(double X, double h, double eps) {
  if (!(h > 0.0) || h > X) throw std::domain_error("selberg: need 0 < h <= X");
  if (!(eps > 0.0) || eps >= 1.0) throw std::domain_error("selberg: need 0 < eps < 1");
}

// Sweeps [lo, hi] across the jumps of D(x) = theta_a(x + h) - theta_b(x), where
// jump positions are pos(p) - shift for the leading term and pos(p) for the
// trailing one, and accumulates piece(D, a, b) over every constant stretch.
template <typename Pos, typename Piece>
long double sweep_jumps(const ThetaTable& tab, double lo, double hi, double h, Pos&& pos, Piece&& piece) {
  const auto primes = tab.primes();
  const auto prefix = tab.prefix();
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t i1 = 0, i2 = 0;
  while (i1 < primes.size() && pos(primes[i1]) <= lo) ++i1;
  while (i2 < primes.size() && pos(primes[i2]) - h <= lo) ++i2;
  long double acc = 0.0L;
  double x = lo;
  while (x < hi) {
    const double next1 = i1 < primes.size() ? pos(primes[i1]) : inf;
    const double next2 = i2 < primes.size() ? pos(primes[i2]) - h : inf;
    const double next = std::min({next1, next2, hi});
    const double D = prefix[i2] - prefix[i1];
    if (next > x) acc += piece(D, x, next);
    if (next1 <= next) ++i1;
    if (next2 <= next) ++i2;
    x = next;
  }
  return acc;
}

}  // namespace

Arc ArcDissection::classify(double alpha) const {
  const double a = std::abs(alpha);
  if (a <= major_bound) return Arc::major;
  if (a <= minor_bound) return Arc::minor;
  return Arc::trivial;
}

std::vector<Interval> ArcDissection::major() const { return {{-major_bound, major_bound}}; }

std::vector<Interval> ArcDissection::minor() const {
  return {{-minor_bound, -major_bound}, {major_bound, minor_bound}};
}

std::vector<Interval> ArcDissection::trivial(double A) const {
  if (A <= minor_bound) return {};
  return {{-A, -minor_bound}, {minor_bound, A}};
}

ArcDissection dissect(double X, const SumContext& ctx) {
  if (ctx.L < 1) throw std::domain_error("dissect: L must be at least 1");
  if (!(X > 1.0)) throw std::domain_error("dissect: X must exceed 1");
  ArcDissection d;
  d.X = X;
  d.L = ctx.L;
  d.P = std::pow(X, 0.4) / std::log(X);
  d.major_bound = d.P / X;
  d.minor_bound = static_cast<double>(ctx.L) * ctx.L;
  if (d.major_bound >= d.minor_bound) throw std::domain_error("dissect: major arc swallows the minor arc (P/X >= L^2)");
  return d;
}

Complex eval_T1(double alpha, const SumContext& ctx) {
  const double lo = ctx.eps * ctx.X;
  const double w = ctx.X - lo;
  const long double centre = 0.5L * (static_cast<long double>(lo) + ctx.X);
  const double z = kPi * w * alpha;
  double sinc;
  if (std::abs(z) < 1e-4) {
    sinc = 1.0 - z * z / 6.0;
  } else {
    sinc = sin_pi(static_cast<long double>(w) * alpha) / z;
  }
  return unit_phase(centre * alpha) * (w * sinc);
}

Complex eval_T2(double alpha, const SumContext& ctx) {
  const double lo = std::sqrt(ctx.eps * ctx.X);
  const double hi = std::sqrt(ctx.X);
  const std::uint64_t n = panels_for(hi - lo, std::abs(alpha) * (hi + lo), 1.0);
  auto f = [&](double t) { return unit_phase(static_cast<long double>(t) * t * alpha); };
  return gauss_sum<Rule20, Complex>(f, lo, hi, n, 1);
}

Complex eval_U1(double alpha, const SumContext& ctx) {
  const auto a = static_cast<long double>(std::ceil(ctx.eps * ctx.X));
  const auto b = static_cast<long double>(std::floor(ctx.X));
  const long double N = b - a + 1.0L;
  if (N <= 0.0L) return {0.0, 0.0};
  if (alpha == std::round(alpha)) return {static_cast<double>(N), 0.0};
  const double ratio = sin_pi(N * alpha) / sin_pi(alpha);
  return unit_phase(0.5L * (a + b) * alpha) * ratio;
}

Complex eval_U2(double alpha, const SumContext& ctx) {
  const double lo = ctx.eps * ctx.X;
  Complex sum{0.0, 0.0};
  for (auto n = static_cast<std::uint64_t>(std::ceil(std::sqrt(lo))); static_cast<double>(n) * n <= ctx.X; ++n) {
    if (static_cast<double>(n) * n < lo) continue;
    const long double n2 = static_cast<long double>(n) * n;
    sum += unit_phase(n2 * alpha);
  }
  return sum;
}

Complex form_sum_product(double alpha, const FormCoefficients& form, const SumContext& ctx) {
  Complex v = eval_S1(form.lambda[0] * alpha, ctx) * eval_S2(form.lambda[1] * alpha, ctx) *
              eval_S2(form.lambda[2] * alpha, ctx);
  for (double m : form.mu) v *= eval_G(m * alpha, ctx.L);
  if (form.varpi != 0.0) v *= unit_phase(static_cast<long double>(form.varpi) * alpha);
  return v;
}

Complex integrand(double alpha, const FormCoefficients& form, const SumContext& ctx) {
  return form_sum_product(alpha, form, ctx) * fejer_K(alpha, form.eta);
}

double integrand_bandwidth(const FormCoefficients& form, const SumContext& ctx) {
  const double p1 = max_or_zero(ctx.linear_primes);
  const double p2 = max_or_zero(ctx.square_primes);
  double w = std::abs(form.lambda[0]) * p1 + (std::abs(form.lambda[1]) + std::abs(form.lambda[2])) * p2 * p2;
  for (double m : form.mu) w += std::abs(m) * std::ldexp(1.0, ctx.L);
  return w + std::abs(form.varpi) + form.eta;
}

double sum_product_envelope(const FormCoefficients& form, const SumContext& ctx) {
  double s1 = 0.0, s2 = 0.0;
  for (double l : ctx.linear_logs) s1 += l;
  for (double l : ctx.square_logs) s2 += l;
  return std::pow(static_cast<double>(ctx.L), static_cast<double>(form.mu.size())) * s1 * s2 * s2;
}

RegionIntegral integrate_region(const std::vector<Interval>& region, const FormCoefficients& form, const SumContext& ctx,
                                const QuadratureSpec& quad) {
  const double W = integrand_bandwidth(form, ctx);
  auto f = [&](double a) { return integrand(a, form, ctx); };
  RegionIntegral out;
  std::uint64_t remaining = quad.panel_budget;
  for (const auto& iv : region) {
    if (!(iv.hi > iv.lo)) continue;
    const auto r = doubled_panels(f, iv.lo, iv.hi, panels_for(iv.hi - iv.lo, W, quad.panels_per_cycle), remaining,
                                  quad.workers);
    out.value += r.value;
    out.panel_error += r.error;
    out.panels += r.panels;
    out.budget_exceeded = out.budget_exceeded || r.budget_exceeded;
    remaining = remaining > r.panels ? remaining - r.panels : 2;
  }
  return out;
}

RegionIntegral integrate_line(const FormCoefficients& form, const SumContext& ctx, const QuadratureSpec& quad) {
  if (!(quad.truncation_A > 0.0)) throw std::invalid_argument("integrate_line: truncation A must be positive");
  const double W = integrand_bandwidth(form, ctx);
  RegionIntegral out;
  PanelResult r;
  if (quad.rule == QuadratureRule::periodic_fold) {
    const double Q = quad.period;
    check_period(form, Q);
    const double folds = std::floor(quad.truncation_A / Q - 0.5);
    const auto N = static_cast<std::uint64_t>(std::max(0.0, folds));
    out.truncation_A = (static_cast<double>(N) + 0.5) * Q;
    auto f = [&](double a) { return form_sum_product(a, form, ctx) * folded_kernel(a, form.eta, Q, N); };
    r = doubled_panels(f, 0.0, 0.5 * Q, panels_for(0.5 * Q, W, quad.panels_per_cycle), quad.panel_budget,
                       quad.workers);
  } else {
    out.truncation_A = quad.truncation_A;
    auto f = [&](double a) { return integrand(a, form, ctx); };
    r = doubled_panels(f, 0.0, quad.truncation_A, panels_for(quad.truncation_A, W, quad.panels_per_cycle),
                       quad.panel_budget, quad.workers);
  }
  // integrand(-a) = conj(integrand(a)), so the symmetric integral is real.
  out.value = {2.0 * r.value.real(), 0.0};
  out.panel_error = 2.0 * r.error;
  out.panels = r.panels;
  out.budget_exceeded = r.budget_exceeded;
  out.tail_bound = sum_product_envelope(form, ctx) * 2.0 / (kPi * kPi * out.truncation_A);
  return out;
}

RegionIntegral kernel_transform(double t, double eta, const QuadratureSpec& quad) {
  const double A = quad.truncation_A;
  if (!(A > 0.0)) throw std::invalid_argument("kernel_transform: truncation A must be positive");
  auto f = [&](double a) { return Complex{fejer_K(a, eta) * std::cos(2.0 * kPi * t * a), 0.0}; };
  const auto r = doubled_panels(f, 0.0, A, panels_for(A, std::abs(t) + eta, quad.panels_per_cycle), quad.panel_budget,
                                quad.workers);
  RegionIntegral out;
  out.value = {2.0 * r.value.real(), 0.0};
  out.panel_error = 2.0 * r.error;
  out.panels = r.panels;
  out.budget_exceeded = r.budget_exceeded;
  out.truncation_A = A;
  out.tail_bound = 2.0 / (kPi * kPi * A);
  return out;
}

double trivial_arc_envelope(const FormCoefficients& form, const SumContext& ctx, double A, const QuadratureSpec& quad) {
  const double L2 = static_cast<double>(ctx.L) * ctx.L;
  if (A <= L2) return 0.0;
  const double Ls = std::pow(static_cast<double>(ctx.L), static_cast<double>(form.mu.size()));
  FormCoefficients bare = form;
  bare.mu.clear();
  bare.varpi = 0.0;
  auto f = [&](double a) {
    const double s = std::abs(form_sum_product(a, bare, ctx));
    return Complex{s / (kPi * kPi * a * a), 0.0};
  };
  const std::uint64_t n = panels_for(A - L2, integrand_bandwidth(bare, ctx), quad.panels_per_cycle);
  const Complex v = gauss_sum<Rule20, Complex>(f, L2, A, std::min(n, quad.panel_budget), quad.workers);
  return 2.0 * Ls * v.real();
}

double script_J(double u, const FormCoefficients& form, const SumContext& ctx, const ScriptJOptions& opts) {
  check_canonical(form);
  const double eta = form.eta;
  const double a = -form.lambda[0];
  const double l2 = form.lambda[1];
  const double l3 = form.lambda[2];
  const double lo = ctx.eps * ctx.X;
  const double hi = ctx.X;
  const double t_lo = std::sqrt(lo);
  const double t_hi = std::sqrt(hi);

  if (std::abs(u) > eta + (a + l2 + l3) * hi) return 0.0;

  // h(c) = integral over u1 of the tent at -a u1 + c.
  auto h = [&](double c) { return (tent_cdf(c - a * lo, eta) - tent_cdf(c - a * hi, eta)) / a; };
  std::vector<double> kinks;
  for (double base : {a * lo, a * hi}) {
    for (double d : {-eta, 0.0, eta}) kinks.push_back(base + d);
  }

  // Pieces of [t_lo, t_hi] on which c = base + coef t^2 avoids every kink.
  auto split = [&](double base, double coef) {
    std::vector<double> cuts{t_lo, t_hi};
    for (double k : kinks) {
      const double r = (k - base) / coef;
      if (r > 0.0) {
        const double t = std::sqrt(r);
        if (t > t_lo && t < t_hi) cuts.push_back(t);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
  };

  // h is piecewise quadratic in c, so each inner piece is a quartic in t3:
  // one 20-node panel is exact.
  auto inner = [&](double t2) {
    const double base = l2 * t2 * t2 + u;
    const auto cuts = split(base, l3);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      acc += gauss_piece([&](double t3) { return h(base + l3 * t3 * t3); }, cuts[i], cuts[i + 1], 1);
    }
    return acc;
  };

  std::vector<double> outer_cuts{t_lo, t_hi};
  for (double k : kinks) {
    for (double t3 : {t_lo, t_hi}) {
      const double r = (k - u - l3 * t3 * t3) / l2;
      if (r > 0.0) {
        const double t = std::sqrt(r);
        if (t > t_lo && t < t_hi) outer_cuts.push_back(t);
      }
    }
  }
  std::sort(outer_cuts.begin(), outer_cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < outer_cuts.size(); ++i) {
    total += gauss_piece(inner, outer_cuts[i], outer_cuts[i + 1], std::max(1u, opts.outer_panels));
  }
  return total;
}

double script_J_lower_bound(const FormCoefficients& form, double X) {
  const double sum = std::abs(form.lambda[0]) + std::abs(form.lambda[1]) + std::abs(form.lambda[2]);
  return (3.0 - 2.0 * std::numbers::sqrt2) * form.eta * form.eta * X / (4.0 * sum);
}

double selberg_J(double X, double h, double eps) {
  check_selberg(X, h, eps);
  const ThetaTable tab(static_cast<std::uint64_t>(std::ceil(X + h)) + 1);
  auto pos = [](std::uint64_t p) { return static_cast<double>(p); };
  auto piece = [&](double D, double x0, double x1) {
    const long double d = static_cast<long double>(D) - h;
    return d * d * (static_cast<long double>(x1) - x0);
  };
  return static_cast<double>(sweep_jumps(tab, eps * X, X, h, pos, piece));
}

double selberg_Jstar(double X, double h, double eps) {
  check_selberg(X, h, eps);
  const ThetaTable tab(static_cast<std::uint64_t>(std::ceil(std::sqrt(X + h))) + 2);
  auto pos = [](std::uint64_t p) { return static_cast<double>(p) * static_cast<double>(p); };
  auto piece = [&](double D, double x0, double x1) {
    auto f = [&](double x) {
      const double d = D - h / (std::sqrt(x + h) + std::sqrt(x));
      return d * d;
    };
    return static_cast<long double>(gauss_piece(f, x0, x1, 1));
  };
  return static_cast<double>(sweep_jumps(tab, eps * X, X, h, pos, piece));
}

}  // namespace dioph

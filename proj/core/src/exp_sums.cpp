#include "dioph/exp_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dioph/number_theory.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

namespace {

constexpr long double kTwoPiL = 2.0L * 3.141592653589793238462643383279502884L;

SumContext build_context(double X, double eps, double M, int L) {
  if (!(X > 0.0) || !(eps > 0.0) || eps >= 1.0) throw std::domain_error("SumContext: need X > 0 and 0 < eps < 1");
  SumContext ctx;
  ctx.X = X;
  ctx.eps = eps;
  ctx.M = M;
  ctx.L = L;
  const double lo = eps * X;
  const auto top = static_cast<std::uint64_t>(std::floor(X));
  const auto bottom = static_cast<std::uint64_t>(std::ceil(lo));
  for (auto p : primes_in_range(bottom, top)) {
    ctx.linear_primes.push_back(p);
    ctx.linear_logs.push_back(std::log(static_cast<double>(p)));
  }
  const auto root_top = static_cast<std::uint64_t>(std::floor(std::sqrt(X))) + 1;
  for (auto p : sieve_primes(root_top)) {
    const double sq = static_cast<double>(p) * static_cast<double>(p);
    if (sq >= lo && sq <= X) {
      ctx.square_primes.push_back(p);
      ctx.square_logs.push_back(std::log(static_cast<double>(p)));
    }
  }
  return ctx;
}

}  // namespace

Complex unit_phase(long double x) {
  const long double r = x - std::floor(x);
  const long double angle = kTwoPiL * r;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

int power_range_length(double X, double eps, double M) {
  if (!(M > 0.0)) throw std::domain_error("power_range_length: M must be positive");
  if (!(X > 0.0) || !(eps > 0.0)) throw std::domain_error("power_range_length: need X > 0 and eps > 0");
  return static_cast<int>(std::floor(std::log2(eps * X / (2.0 * M))));
}

SumContext make_sum_context(double X, double eps, double M) {
  const int L = power_range_length(X, eps, M);
  if (L < 1) {
    throw std::domain_error("SumContext: eps X / (2M) must exceed 2 so that L >= 1 (got L = " + std::to_string(L) + ")");
  }
  return build_context(X, eps, M, L);
}

SumContext make_sum_context_with_L(double X, double eps, int L) {
  if (L < 1) throw std::domain_error("SumContext: L must be at least 1");
  return build_context(X, eps, 0.0, L);
}

Complex eval_S1(double alpha, const SumContext& ctx) {
  Complex sum{0.0, 0.0};
  const long double a = alpha;
  for (std::size_t i = 0; i < ctx.linear_primes.size(); ++i) {
    sum += ctx.linear_logs[i] * unit_phase(static_cast<long double>(ctx.linear_primes[i]) * a);
  }
  return sum;
}

Complex eval_S2(double alpha, const SumContext& ctx) {
  Complex sum{0.0, 0.0};
  const long double a = alpha;
  for (std::size_t i = 0; i < ctx.square_primes.size(); ++i) {
    const auto p = static_cast<long double>(ctx.square_primes[i]);
    sum += ctx.square_logs[i] * unit_phase(p * p * a);
  }
  return sum;
}

Complex eval_G(double alpha, int L) {
  if (L < 1) throw std::domain_error("eval_G: L must be at least 1");
  long double x = static_cast<long double>(alpha) - std::floor(static_cast<long double>(alpha));
  Complex sum{0.0, 0.0};
  for (int m = 1; m <= L; ++m) {
    x += x;
    if (x >= 1.0L) x -= 1.0L;
    sum += unit_phase(x);
  }
  return sum;
}

double fejer_K(double alpha, double eta) {
  if (!(eta > 0.0)) throw std::domain_error("fejer_K: eta must be positive");
  const double x = std::numbers::pi * eta * alpha;
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    const double sinc = 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    return eta * eta * sinc * sinc;
  }
  const double r = std::sin(x) / (std::numbers::pi * alpha);
  return r * r;
}

double k_hat(double t, double eta) {
  if (!(eta > 0.0)) throw std::domain_error("k_hat: eta must be positive");
  return std::max(0.0, eta - std::abs(t));
}

std::uint64_t moment_count_Nk(unsigned k, int L) {
  if (k == 0 || L < 1) throw std::domain_error("moment_count_Nk: need k >= 1 and L >= 1");
  if (L > 60) throw std::domain_error("moment_count_Nk: L too large for exact 64-bit sums");
  const double tuples = std::pow(static_cast<double>(L), static_cast<double>(k));
  if (tuples > 5e7) throw std::domain_error("moment_count_Nk: L^k too large to enumerate");

  std::vector<std::uint64_t> sums;
  sums.reserve(static_cast<std::size_t>(tuples));
  std::vector<int> m(k, 1);
  while (true) {
    std::uint64_t s = 0;
    for (int e : m) s += std::uint64_t{1} << e;
    sums.push_back(s);
    std::size_t i = 0;
    while (i < k && m[i] == L) m[i++] = 1;
    if (i == k) break;
    ++m[i];
  }
  std::sort(sums.begin(), sums.end());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    const std::uint64_t ways = j - i;
    total += ways * ways;
    i = j;
  }
  return total;
}

double g_moment_quadrature(unsigned k, int L, std::uint64_t points) {
  if (points == 0) throw std::domain_error("g_moment_quadrature: need at least one point");
  long double acc = 0.0L;
  for (std::uint64_t j = 0; j < points; ++j) {
    const double alpha = (static_cast<double>(j) + 0.5) / static_cast<double>(points);
    const double mag2 = std::norm(eval_G(alpha, L));
    acc += std::pow(static_cast<long double>(mag2), static_cast<long double>(k));
  }
  return static_cast<double>(acc / static_cast<long double>(points));
}

std::uint64_t measure_resolution_floor(int L) {
  if (L < 1 || L > 40) throw std::domain_error("measure_resolution_floor: L out of range");
  return std::uint64_t{1} << (L + 4);
}

MeasureEstimate measure_exceed(double nu, int L, std::uint64_t resolution, const MeasureOptions& opts) {
  if (!(nu > 0.0) || nu > 1.0) throw std::invalid_argument("measure_exceed: nu must lie in (0, 1]");
  const std::uint64_t floor = measure_resolution_floor(L);
  if (resolution < floor) {
    throw std::invalid_argument("measure_exceed: resolution " + std::to_string(resolution) + " below the floor 2^(L+4) = " +
                                std::to_string(floor));
  }
  const double threshold = nu * L;
  const double h = 1.0 / static_cast<double>(resolution);
  auto excess = [&](double a) { return std::abs(eval_G(a, L)) - threshold; };

  const auto ranges = split_range(resolution, 256);
  const auto partial = map_chunks<long double>(ranges, opts.workers, [&](std::size_t, IndexRange r) {
    long double acc = 0.0L;
    double left = static_cast<double>(r.begin) * h;
    double f_left = excess(left);
    for (std::uint64_t j = r.begin; j < r.end; ++j) {
      const double right = static_cast<double>(j + 1) * h;
      const double f_right = excess(right);
      const bool in_left = f_left > 0.0;
      const bool in_right = f_right > 0.0;
      if (in_left && in_right) {
        acc += h;
      } else if (in_left != in_right) {
        double a = left, b = right;
        for (unsigned it = 0; it < opts.refinement_depth; ++it) {
          const double mid = 0.5 * (a + b);
          if ((excess(mid) > 0.0) == in_left) {
            a = mid;
          } else {
            b = mid;
          }
        }
        const double crossing = 0.5 * (a + b);
        acc += in_left ? (crossing - left) : (right - crossing);
      }
      left = right;
      f_left = f_right;
    }
    return acc;
  });
  long double total = 0.0L;
  for (auto v : partial) total += v;

  MeasureEstimate est;
  est.nu = nu;
  est.L = L;
  est.grid_resolution = resolution;
  est.estimated_measure = std::clamp(static_cast<double>(total), 0.0, 1.0);
  est.refinement_depth = opts.refinement_depth;
  est.markov_bound_k = opts.markov_k;
  if (opts.markov_k > 0) est.markov_bound_value = markov_bound(nu, L, opts.markov_k);
  return est;
}

double markov_bound(double nu, int L, unsigned k) {
  if (k == 0) throw std::domain_error("markov_bound: k must be at least 1");
  const double scale = std::pow(nu * L, 2.0 * k);
  return static_cast<double>(moment_count_Nk(k, L)) / scale;
}

}  // namespace dioph

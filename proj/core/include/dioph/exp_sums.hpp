#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace dioph {

using Complex = std::complex<double>;

/// e(x) = exp(2 pi i x).
Complex unit_phase(long double x);

/// Summation ranges for one scale X.
///
/// Linear primes satisfy eps X <= p <= X, square primes eps X <= p^2 <= X,
/// and the power-of-two exponents run over 1 <= m <= L with
/// L = floor(log2(eps X / (2 M))).
struct SumContext {
  double X = 0.0;
  double eps = 0.0;
  double M = 0.0;
  int L = 0;
  std::vector<std::uint64_t> linear_primes;
  std::vector<double> linear_logs;
  std::vector<std::uint64_t> square_primes;
  std::vector<double> square_logs;

  bool empty_linear() const { return linear_primes.empty(); }
  bool empty_square() const { return square_primes.empty(); }
};

/// floor(log2(eps X / (2 M))); may be zero or negative for small X.
int power_range_length(double X, double eps, double M);

/// Throws std::domain_error when L < 1.
SumContext make_sum_context(double X, double eps, double M);
/// Same ranges with an explicit L (M is recorded as 0).
SumContext make_sum_context_with_L(double X, double eps, int L);

/// S1(alpha) = sum_{eps X <= p <= X} log p e(p alpha).
Complex eval_S1(double alpha, const SumContext& ctx);
/// S2(alpha) = sum_{eps X <= p^2 <= X} log p e(p^2 alpha).
Complex eval_S2(double alpha, const SumContext& ctx);
/// G(alpha) = sum_{1 <= m <= L} e(2^m alpha). Each 2^m alpha is reduced
/// mod 1 by exact doubling, so large m costs no accuracy.
Complex eval_G(double alpha, int L);

/// Fejer kernel (sin(pi eta alpha) / (pi alpha))^2, equal to eta^2 at 0.
double fejer_K(double alpha, double eta);
/// Its Fourier transform max(0, eta - |t|).
double k_hat(double t, double eta);

/// N_k(L): ordered pairs of k-tuples in [1, L]^k with equal sums of powers of
/// two, i.e. the integral of |G|^{2k} over [0, 1]. Counted as the sum over
/// distinct sums of (number of representations)^2.
std::uint64_t moment_count_Nk(unsigned k, int L);

/// Midpoint rule for the integral of |G|^{2k} over [0, 1]. Exact (up to
/// rounding) once points > k 2^{L+1}.
double g_moment_quadrature(unsigned k, int L, std::uint64_t points);

struct MeasureEstimate {
  double nu = 0.0;
  int L = 0;
  std::uint64_t grid_resolution = 0;
  double estimated_measure = 0.0;
  unsigned refinement_depth = 0;
  unsigned markov_bound_k = 0;
  double markov_bound_value = 0.0;
};

struct MeasureOptions {
  unsigned refinement_depth = 30;
  unsigned markov_k = 2;
  unsigned workers = 1;
};

/// Smallest accepted grid: 2^{L+4} points, enough to out-resolve e(2^L alpha).
std::uint64_t measure_resolution_floor(int L);

/// Lebesgue measure of {alpha in (0,1): |G(alpha)| > nu L}, estimated on a
/// uniform grid; cells whose endpoints straddle the threshold are split at
/// the crossing found by bisection. Throws std::invalid_argument when
/// resolution is below the floor.
MeasureEstimate measure_exceed(double nu, int L, std::uint64_t resolution, const MeasureOptions& opts = {});

/// Chebyshev-Markov bound N_k(L) / (nu L)^{2k} on the same measure.
double markov_bound(double nu, int L, unsigned k);

}  // namespace dioph

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dioph/hpreal.hpp"
#include "dioph/system.hpp"

namespace dioph {

/// One solution of |l1 p1 + l2 p2^2 + l3 p3^2 + mu_1 2^{m_1} + ... + varpi| < eta.
struct SolutionRecord {
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  std::uint64_t p3 = 0;
  std::vector<int> m;
  HPReal form_value;
  double weight = 0.0;  // log p1 log p2 log p3
};

struct SearchParams {
  double X = 0.0;
  std::size_t s = 1;
  /// Range parameter: eps X <= p1, p2^2, p3^2 <= X.
  double range_eps = 0.1;
  /// Overrides L = floor(log2(eps X / (2 M))), M = |mu_1| + ... + |mu_s|.
  std::optional<int> L;
};

struct SearchOptions {
  std::size_t sample_limit = 100;
  unsigned workers = 1;
  /// Receives every record in output order (p2, p3, p1, m lexicographic).
  std::function<void(const SolutionRecord&)> sink;
};

struct CountReport {
  double X = 0.0;
  double range_eps = 0.0;
  std::size_t s = 0;
  int L = 0;
  std::uint64_t count = 0;
  /// Sum of weight * khat(form_value, eta) over the solutions.
  double weighted_sum = 0.0;
  std::vector<SolutionRecord> sample;
  std::size_t linear_primes = 0;
  std::size_t square_primes = 0;
  /// Some range was empty (or L < 1), so nothing was enumerated.
  bool empty_range = false;
  /// X = q^2 for a convergent denominator q of lambda_2 / lambda_3.
  bool x_is_convergent_square = false;
  /// Candidates that needed a full-precision confirmation.
  std::uint64_t borderline_checks = 0;
};

/// L = floor(log2(eps X / (2 M))) for the first s mu coefficients.
int search_power_range(const CoefficientSystem& sys, double X, std::size_t s, double range_eps);

/// Pruned enumeration: for each (p2, p3) and each exponent tuple the feasible
/// p1 window is found by binary search on an outward-rounded interval;
/// near-boundary candidates are confirmed at the system precision.
/// Work is partitioned by p2.
CountReport count_solutions(const CoefficientSystem& sys, const SearchParams& params, const SearchOptions& opts = {});

/// True when X is the square of a convergent denominator of |lambda_2 / lambda_3|.
bool is_convergent_square(const CoefficientSystem& sys, double X);

struct RCount {
  std::uint64_t count = 0;
  /// The upper bound of the four-squares lemma is stated only for n = 0 mod 24.
  bool lemma_applies = false;
};

/// Ordered quadruples of primes p_j <= sqrt X with n = p1^2 + p2^2 - p3^2 - p4^2,
/// by meet in the middle on exact pair sums. Requires |n| <= X.
RCount r_count(std::int64_t n, double X);

/// 2 (1 + eps) c4 (pi^2 / 16) Sigma''(n) X / log^4 X.
double r_count_bound(std::int64_t n, double X, double eps);

/// Ordered quadruples of primes p_j <= sqrt X with p1^2 + p2^2 = p3^2 + p4^2
/// and p1 p2 != p3 p4. Requires X >= 4.
std::uint64_t rieger_count(double X);

/// Solutions of 2^{m1} + 2^{m2} = 2^{m3} + 2^{m4} with 1 <= m_i <= L, by direct
/// enumeration of all L^4 tuples.
std::uint64_t diagonal_powers_count(int L);

}  // namespace dioph

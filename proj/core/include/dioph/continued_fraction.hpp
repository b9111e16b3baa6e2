#pragma once

#include <vector>

#include <gmpxx.h>

#include "dioph/hpreal.hpp"

namespace dioph {

/// p/q with gcd(|p|, q) = 1 and q >= 1; `value` is p/q at the input precision.
struct Convergent {
  mpz_class p;
  mpz_class q;
  HPReal value;
};

struct ContinuedFraction {
  std::vector<mpz_class> partial_quotients;
  std::vector<Convergent> convergents;
  /// Stopped before n_terms because the input digits ran out.
  bool truncated = false;
  /// Stopped because the remainder fell below the carried precision (x rational).
  bool terminated = false;
};

/// Regular continued fraction of x > 0 via p_k = a_k p_{k-1} + p_{k-2}.
///
/// A convergent is emitted only while q_k^2 stays below 10^(digits - 4), so
/// that |x - p_k/q_k| < 1/q_k^2 is still resolved by the carried digits.
/// Roughly 2 * n_terms * log10(max q) digits are needed for n_terms terms.
ContinuedFraction continued_fraction(const HPReal& x, unsigned n_terms);

}  // namespace dioph

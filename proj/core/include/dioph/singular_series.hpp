#pragma once

#include <cstdint>

#include "dioph/hpreal.hpp"
#include "dioph/rational.hpp"

namespace dioph {

/// A singular-series value: exact rational plus its decimal rendering.
struct SingularValue {
  std::int64_t n = 0;
  ExactRational exact;
  HPReal decimal;
};

/// Product over odd primes p | n of (p-1)/(p-2).
SingularValue sigma_prime(std::uint64_t n, unsigned digits = HPReal::kDefaultDigits);

/// Product over odd primes p | n of (p+1)/p.
SingularValue sigma_double_prime(std::uint64_t n, unsigned digits = HPReal::kDefaultDigits);

/// The four-squares series
///   (2 - 2^{1-b0} - 2^{-b0}) * prod_{p>2, p^b || n} (1 + 1/p - p^{-b-1} - p^{-b-2}),
/// where 2^{b0} || n. Only defined for n = 0 mod 24, n != 0; anything else is
/// a std::domain_error.
SingularValue sigma_minus(std::int64_t n, unsigned digits = HPReal::kDefaultDigits);

/// Truncated product over odd primes p <= prime_limit of 1 - 1/(p-1)^2.
HPReal c0_partial(std::uint64_t prime_limit, unsigned digits = HPReal::kDefaultDigits);

/// Midpoint of the published enclosure 0.66016181584 < c0 < 0.66016181585.
HPReal c0_midpoint(unsigned digits = HPReal::kDefaultDigits);

/// n / (c0 * phi(n)), using the c0 midpoint.
HPReal totient_ratio_bound(std::uint64_t n, unsigned digits = HPReal::kDefaultDigits);

/// e^gamma loglog n / c0 + 2.50637 / (c0 loglog n), for n >= 3.
HPReal bound_rosser_schoenfeld(std::uint64_t n, unsigned digits = HPReal::kDefaultDigits);

/// e^gamma loglog n, for n >= 31.
HPReal bound_sole_planat(std::uint64_t n, unsigned digits = HPReal::kDefaultDigits);

/// 2 log(2n): the older bound both estimates above are compared against.
HPReal two_log_2n(std::uint64_t n, unsigned digits = HPReal::kDefaultDigits);

}  // namespace dioph

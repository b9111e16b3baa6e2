#include "dioph/singular_series.hpp"

#include <stdexcept>

#include "dioph/number_theory.hpp"

namespace dioph {

namespace {

SingularValue finish(std::int64_t n, ExactRational exact, unsigned digits) {
  HPReal decimal = HPReal::from_rational(exact, digits);
  return {n, std::move(exact), std::move(decimal)};
}

HPReal loglog(std::uint64_t n, unsigned digits) {
  return log(log(HPReal::from_integer(mpz_class(static_cast<unsigned long>(n)), digits)));
}

}  // namespace

SingularValue sigma_prime(std::uint64_t n, unsigned digits) {
  if (n == 0) throw std::domain_error("sigma_prime: n must be positive");
  ExactRational product(1);
  for (const auto& pp : factorize(n).factors) {
    if (pp.prime == 2) continue;
    const auto p = static_cast<long>(pp.prime);
    product *= ExactRational(p - 1, p - 2);
  }
  return finish(static_cast<std::int64_t>(n), std::move(product), digits);
}

SingularValue sigma_double_prime(std::uint64_t n, unsigned digits) {
  if (n == 0) throw std::domain_error("sigma_double_prime: n must be positive");
  ExactRational product(1);
  for (const auto& pp : factorize(n).factors) {
    if (pp.prime == 2) continue;
    const auto p = static_cast<long>(pp.prime);
    product *= ExactRational(p + 1, p);
  }
  return finish(static_cast<std::int64_t>(n), std::move(product), digits);
}

SingularValue sigma_minus(std::int64_t n, unsigned digits) {
  if (n == 0 || n % 24 != 0) throw std::domain_error("sigma_minus: n must be a nonzero multiple of 24");
  const auto magnitude = static_cast<std::uint64_t>(n < 0 ? -n : n);
  const auto f = factorize(magnitude);

  mpz_class two_b0;
  mpz_ui_pow_ui(two_b0.get_mpz_t(), 2, f.exponent_of(2));
  // 2 - 2/2^b0 - 1/2^b0 = 2 - 3/2^b0
  ExactRational product = ExactRational(2) - ExactRational(mpz_class(3), two_b0);

  for (const auto& pp : f.factors) {
    if (pp.prime == 2) continue;
    const mpz_class p = static_cast<unsigned long>(pp.prime);
    mpz_class p_b1, p_b2;
    mpz_pow_ui(p_b1.get_mpz_t(), p.get_mpz_t(), pp.exponent + 1);
    p_b2 = p_b1 * p;
    product *= ExactRational(1) + ExactRational(mpz_class(1), p) - ExactRational(mpz_class(1), p_b1) -
               ExactRational(mpz_class(1), p_b2);
  }
  return finish(n, std::move(product), digits);
}

HPReal c0_partial(std::uint64_t prime_limit, unsigned digits) {
  if (prime_limit < 3) throw std::domain_error("c0_partial: prime_limit must be at least 3");
  HPReal product(1, digits);
  HPReal factor(0, digits);
  HPReal one(1, digits);
  for_each_prime(prime_limit, [&](std::uint64_t p) {
    if (p == 2) return;
    const mpz_class pm1 = static_cast<unsigned long>(p - 1);
    // 1 - 1/(p-1)^2
    factor = one - one / HPReal::from_integer(pm1 * pm1, digits);
    product *= factor;
  });
  return product;
}

HPReal c0_midpoint(unsigned digits) { return HPReal::parse("0.660161815845", digits); }

HPReal totient_ratio_bound(std::uint64_t n, unsigned digits) {
  if (n == 0) throw std::domain_error("totient_ratio_bound: n must be positive");
  const auto nn = HPReal::from_integer(mpz_class(static_cast<unsigned long>(n)), digits);
  const auto phi = HPReal::from_integer(mpz_class(static_cast<unsigned long>(euler_phi(n))), digits);
  return nn / (c0_midpoint(digits) * phi);
}

HPReal bound_rosser_schoenfeld(std::uint64_t n, unsigned digits) {
  if (n < 3) throw std::domain_error("bound_rosser_schoenfeld: requires n >= 3");
  const HPReal ll = loglog(n, digits);
  const HPReal c0 = c0_midpoint(digits);
  return exp(HPReal::euler_gamma(digits)) * ll / c0 + HPReal::parse("2.50637", digits) / (c0 * ll);
}

HPReal bound_sole_planat(std::uint64_t n, unsigned digits) {
  if (n < 31) throw std::domain_error("bound_sole_planat: requires n >= 31");
  return exp(HPReal::euler_gamma(digits)) * loglog(n, digits);
}

HPReal two_log_2n(std::uint64_t n, unsigned digits) {
  if (n == 0) throw std::domain_error("two_log_2n: n must be positive");
  return 2 * log(HPReal::from_integer(mpz_class(static_cast<unsigned long>(2 * n)), digits));
}

}  // namespace dioph

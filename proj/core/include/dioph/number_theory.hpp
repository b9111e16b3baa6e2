#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dioph {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
/// The empty list is the factorization of 1.
struct Factorization {
  std::vector<PrimePower> factors;

  std::uint64_t product() const;
  /// Exponent of `p` (0 when p does not divide).
  unsigned exponent_of(std::uint64_t p) const;
  bool squarefree() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// All primes <= limit in ascending order; empty for limit < 2.
/// The segmented sieve may run on several workers; output does not depend on
/// the worker count.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, unsigned workers = 1);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Streams the primes <= limit in ascending order without materializing them.
void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& visit);

/// Trial division; intended for n up to about 1e12. factorize(1) is empty.
Factorization factorize(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Multiplicative order of 2 modulo odd d, with the convention order(1) = 1.
/// Throws std::domain_error for even or zero d.
std::uint64_t mult_order_2(std::uint64_t d);

/// (base^exp) mod m using 128-bit intermediates.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// theta(x) = sum of log p over primes p <= x, summed in ascending order.
double chebyshev_theta(double x);

/// Prefix table for repeated theta queries over a fixed prime list.
class ThetaTable {
 public:
  explicit ThetaTable(std::uint64_t limit);

  /// theta(x) for 0 <= x <= limit().
  double operator()(double x) const;
  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint64_t> primes() const { return primes_; }
  /// prefix()[i] = sum of log p over the first i primes.
  std::span<const double> prefix() const { return prefix_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
  std::vector<double> prefix_;
};

}  // namespace dioph

#include "dioph/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dioph/parallel.hpp"

namespace dioph {

namespace {

constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 20;  // integers per segment

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// Primes in [lo, hi] given every base prime up to sqrt(hi).
void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                   std::vector<std::uint64_t>& out) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<std::uint64_t>(lo, 2);
  std::vector<char> composite(hi - lo + 1, 0);
  for (std::uint64_t p : base) {
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
  }
  for (std::uint64_t i = lo; i <= hi; ++i) {
    if (!composite[i - lo]) out.push_back(i);
  }
}

}  // namespace

std::uint64_t Factorization::product() const {
  std::uint64_t n = 1;
  for (const auto& pp : factors) {
    for (unsigned e = 0; e < pp.exponent; ++e) n *= pp.prime;
  }
  return n;
}

unsigned Factorization::exponent_of(std::uint64_t p) const {
  for (const auto& pp : factors) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, unsigned workers) {
  if (limit < 2) return {};
  const auto base = small_primes(isqrt(limit));
  const std::uint64_t segments = (limit + kSegmentSpan) / kSegmentSpan;  // covers [0, limit]
  auto ranges = split_range(segments, static_cast<std::size_t>(std::min<std::uint64_t>(segments, 256)));
  auto parts = map_chunks<std::vector<std::uint64_t>>(ranges, workers, [&](std::size_t, IndexRange r) {
    std::vector<std::uint64_t> found;
    const std::uint64_t lo = r.begin * kSegmentSpan;
    const std::uint64_t hi = std::min(limit, r.end * kSegmentSpan - 1);
    for (std::uint64_t seg = lo; seg <= hi; seg += kSegmentSpan) {
      sieve_segment(seg, std::min(hi, seg + kSegmentSpan - 1), base, found);
    }
    return found;
  });
  std::vector<std::uint64_t> out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  const auto base = small_primes(isqrt(hi));
  for (std::uint64_t seg = std::max<std::uint64_t>(lo, 2); seg <= hi; seg += kSegmentSpan) {
    sieve_segment(seg, std::min(hi, seg + kSegmentSpan - 1), base, out);
    if (hi - seg < kSegmentSpan) break;
  }
  return out;
}

void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& visit) {
  if (limit < 2) return;
  const auto base = small_primes(isqrt(limit));
  std::vector<std::uint64_t> buffer;
  for (std::uint64_t seg = 0; seg <= limit; seg += kSegmentSpan) {
    buffer.clear();
    sieve_segment(seg, std::min(limit, seg + kSegmentSpan - 1), base, buffer);
    for (auto p : buffer) visit(p);
    if (limit - seg < kSegmentSpan) break;
  }
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  Factorization f;
  auto pull = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  pull(2);
  pull(3);
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    pull(p);
    pull(p + 2);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

int mobius(std::uint64_t n) {
  const auto f = factorize(n);
  if (!f.squarefree()) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n).factors) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  u128 result = 1;
  u128 b = base % m;
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t mult_order_2(std::uint64_t d) {
  if (d == 0 || d % 2 == 0) throw std::domain_error("mult_order_2: modulus must be odd and positive");
  if (d == 1) return 1;
  // The order divides phi(d); strip prime factors of phi while 2^(ord/p) stays 1.
  std::uint64_t order = euler_phi(d);
  for (const auto& pp : factorize(order).factors) {
    for (unsigned e = 0; e < pp.exponent; ++e) {
      if (pow_mod(2, order / pp.prime, d) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

double chebyshev_theta(double x) {
  if (x < 2.0) return 0.0;
  double sum = 0.0;
  for_each_prime(static_cast<std::uint64_t>(std::floor(x)), [&](std::uint64_t p) { sum += std::log(static_cast<double>(p)); });
  return sum;
}

ThetaTable::ThetaTable(std::uint64_t limit) : limit_(limit), primes_(sieve_primes(limit)) {
  prefix_.reserve(primes_.size() + 1);
  prefix_.push_back(0.0);
  double sum = 0.0;
  for (auto p : primes_) {
    sum += std::log(static_cast<double>(p));
    prefix_.push_back(sum);
  }
}

double ThetaTable::operator()(double x) const {
  if (x > static_cast<double>(limit_)) throw std::out_of_range("ThetaTable: argument beyond table limit");
  if (x < 2.0) return 0.0;
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  const auto count = static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
  return prefix_[count];
}

}  // namespace dioph

#include "dioph/search.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dioph/constants.hpp"
#include "dioph/continued_fraction.hpp"
#include "dioph/exp_sums.hpp"
#include "dioph/number_theory.hpp"
#include "dioph/parallel.hpp"
#include "dioph/singular_series.hpp"

namespace dioph {

namespace {

struct Hit {
  std::uint64_t p1;
  std::uint64_t p3;
  std::uint64_t tuple;
  long double form;
  bool confirmed_hp;
};

std::vector<std::uint64_t> square_range_primes(double lo, double X) {
  std::vector<std::uint64_t> out;
  const auto top = static_cast<std::uint64_t>(std::floor(std::sqrt(X))) + 1;
  for (auto p : sieve_primes(top)) {
    const double sq = static_cast<double>(p) * static_cast<double>(p);
    if (sq >= lo && sq <= X) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> primes_up_to_root(double X) {
  auto top = static_cast<std::uint64_t>(std::floor(std::sqrt(X)));
  while ((top + 1) * (top + 1) <= static_cast<std::uint64_t>(X)) ++top;
  while (top * top > static_cast<std::uint64_t>(X)) --top;
  return sieve_primes(top);
}

std::vector<int> tuple_exponents(std::uint64_t index, std::size_t s, int L) {
  std::vector<int> m(s);
  for (std::size_t i = s; i-- > 0;) {
    m[i] = static_cast<int>(index % static_cast<std::uint64_t>(L)) + 1;
    index /= static_cast<std::uint64_t>(L);
  }
  return m;
}

HPReal exact_form(const CoefficientSystem& sys, std::uint64_t p1, std::uint64_t p2, std::uint64_t p3,
                  const std::vector<int>& m) {
  HPReal v = sys.lambda[0] * static_cast<long>(p1) + sys.lambda[1] * static_cast<long>(p2 * p2) +
             sys.lambda[2] * static_cast<long>(p3 * p3) + sys.varpi;
  for (std::size_t i = 0; i < m.size(); ++i) v += sys.mu[i] * (1L << m[i]);
  return v;
}

}  // namespace

int search_power_range(const CoefficientSystem& sys, double X, std::size_t s, double range_eps) {
  return power_range_length(X, range_eps, sys.sum_abs_mu(s).to_double());
}

bool is_convergent_square(const CoefficientSystem& sys, double X) {
  if (!(X >= 1.0) || X > 9e15) return false;
  const auto q = static_cast<std::uint64_t>(std::llround(std::sqrt(X)));
  if (static_cast<double>(q) * static_cast<double>(q) != X) return false;
  const auto cf = continued_fraction(abs(sys.lambda[1] / sys.lambda[2]), 200);
  for (const auto& c : cf.convergents) {
    if (c.q == q) return true;
    if (c.q > q) break;
  }
  return false;
}

CountReport count_solutions(const CoefficientSystem& sys, const SearchParams& params, const SearchOptions& opts) {
  if (params.s < 1) throw ValidationError("search: s must be at least 1");
  if (params.s > sys.mu.size()) {
    throw ValidationError("search: s = " + std::to_string(params.s) + " exceeds the " + std::to_string(sys.mu.size()) +
                          " available mu coefficients");
  }
  if (!(params.range_eps > 0.0) || params.range_eps >= 1.0) throw ValidationError("search: range eps must lie in (0, 1)");
  if (!(params.X > 0.0)) throw ValidationError("search: X must be positive");

  CountReport report;
  report.X = params.X;
  report.range_eps = params.range_eps;
  report.s = params.s;
  report.L = params.L ? *params.L : search_power_range(sys, params.X, params.s, params.range_eps);
  report.x_is_convergent_square = is_convergent_square(sys, params.X);

  const double lo = params.range_eps * params.X;
  const auto linear = primes_in_range(static_cast<std::uint64_t>(std::ceil(lo)),
                                      static_cast<std::uint64_t>(std::floor(params.X)));
  const auto squares = square_range_primes(lo, params.X);
  report.linear_primes = linear.size();
  report.square_primes = squares.size();
  if (linear.empty() || squares.empty() || report.L < 1) {
    report.empty_range = true;
    return report;
  }

  const std::size_t s = params.s;
  const int L = report.L;
  const double tuples_d = std::pow(static_cast<double>(L), static_cast<double>(s));
  if (tuples_d > 1e7) throw ValidationError("search: L^s = " + std::to_string(tuples_d) + " exponent tuples is too many");
  const auto tuples = static_cast<std::uint64_t>(tuples_d);

  const FormCoefficients f = sys.form(s);
  const long double l1 = f.lambda[0], l2 = f.lambda[1], l3 = f.lambda[2];
  const long double eta = f.eta;
  std::vector<long double> mu_sum(tuples), mu_mag(tuples);
  for (std::uint64_t j = 0; j < tuples; ++j) {
    const auto m = tuple_exponents(j, s, L);
    long double v = 0.0L, mag = 0.0L;
    for (std::size_t i = 0; i < s; ++i) {
      const long double term = std::ldexp(static_cast<long double>(f.mu[i]), m[i]);
      v += term;
      mag += std::abs(term);
    }
    mu_sum[j] = v;
    mu_mag[j] = mag;
  }

  const auto chunks = split_range(squares.size(), squares.size());
  const auto parts = map_chunks<std::vector<Hit>>(chunks, opts.workers, [&](std::size_t, IndexRange r) {
    std::vector<Hit> hits;
    for (std::uint64_t i2 = r.begin; i2 < r.end; ++i2) {
      const auto p2 = squares[i2];
      for (const auto p3 : squares) {
        const std::size_t first = hits.size();
        const long double base = l2 * static_cast<long double>(p2 * p2) + l3 * static_cast<long double>(p3 * p3) + f.varpi;
        const long double base_mag = std::abs(l2) * static_cast<long double>(p2 * p2) +
                                     std::abs(l3) * static_cast<long double>(p3 * p3) + std::abs(f.varpi);
        for (std::uint64_t j = 0; j < tuples; ++j) {
          const long double c = base + mu_sum[j];
          // l1 p1 must lie in (-eta - c, eta - c); widen outward before searching.
          long double a = (-eta - c) / l1, b = (eta - c) / l1;
          if (a > b) std::swap(a, b);
          const long double slack = 1e-9L * (std::abs(c) + eta) / std::abs(l1) + 1e-6L;
          a -= slack;
          b += slack;
          auto it = std::lower_bound(linear.begin(), linear.end(), a,
                                     [](std::uint64_t p, long double v) { return static_cast<long double>(p) < v; });
          for (; it != linear.end() && static_cast<long double>(*it) <= b; ++it) {
            const long double form = l1 * static_cast<long double>(*it) + c;
            // Coefficients were rounded to double: allow for that before trusting the sign.
            const long double delta = 1e-14L * (std::abs(l1) * static_cast<long double>(*it) + base_mag + mu_mag[j] + eta);
            const long double margin = std::abs(form) - eta;
            if (margin < -delta) {
              hits.push_back({*it, p3, j, form, false});
            } else if (margin <= delta) {
              const HPReal exact = exact_form(sys, *it, p2, p3, tuple_exponents(j, s, L));
              if (abs(exact) < sys.eta) hits.push_back({*it, p3, j, exact.to_double(), true});
            }
          }
        }
        std::sort(hits.begin() + static_cast<std::ptrdiff_t>(first), hits.end(), [](const Hit& x, const Hit& y) {
          return x.p1 != y.p1 ? x.p1 < y.p1 : x.tuple < y.tuple;
        });
      }
    }
    return hits;
  });

  long double weighted = 0.0L;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto p2 = squares[chunks[c].begin];
    const double log_p2 = std::log(static_cast<double>(p2));
    for (const auto& h : parts[c]) {
      ++report.count;
      if (h.confirmed_hp) ++report.borderline_checks;
      const double weight = std::log(static_cast<double>(h.p1)) * log_p2 * std::log(static_cast<double>(h.p3));
      weighted += static_cast<long double>(weight) * k_hat(static_cast<double>(h.form), f.eta);
      const bool keep = report.sample.size() < opts.sample_limit;
      if (!keep && !opts.sink) continue;
      SolutionRecord rec;
      rec.p1 = h.p1;
      rec.p2 = p2;
      rec.p3 = h.p3;
      rec.m = tuple_exponents(h.tuple, s, L);
      rec.form_value = exact_form(sys, h.p1, p2, h.p3, rec.m);
      rec.weight = weight;
      if (opts.sink) opts.sink(rec);
      if (keep) report.sample.push_back(std::move(rec));
    }
  }
  report.weighted_sum = static_cast<double>(weighted);
  return report;
}

RCount r_count(std::int64_t n, double X) {
  if (!(X >= 0.0) || static_cast<double>(std::llabs(n)) > X) throw std::domain_error("r_count: need |n| <= X");
  const auto primes = primes_up_to_root(X);
  std::unordered_map<std::int64_t, std::uint64_t> pair_sums;
  for (auto a : primes) {
    for (auto b : primes) ++pair_sums[static_cast<std::int64_t>(a * a + b * b)];
  }
  RCount out;
  out.lemma_applies = n % 24 == 0;
  for (auto a : primes) {
    for (auto b : primes) {
      const auto it = pair_sums.find(static_cast<std::int64_t>(a * a + b * b) - n);
      if (it != pair_sums.end()) out.count += it->second;
    }
  }
  return out;
}

double r_count_bound(std::int64_t n, double X, double eps) {
  if (n <= 0) throw std::domain_error("r_count_bound: n must be positive");
  if (!(X > 1.0)) throw std::domain_error("r_count_bound: X must exceed 1");
  const double sigma = sigma_double_prime(static_cast<std::uint64_t>(n)).decimal.to_double();
  const double lx = std::log(X);
  return 2.0 * (1.0 + eps) * static_cast<double>(kC4) * (std::numbers::pi * std::numbers::pi / 16.0) * sigma * X /
         (lx * lx * lx * lx);
}

std::uint64_t rieger_count(double X) {
  if (!(X >= 4.0)) throw std::domain_error("rieger_count: X must be at least 4");
  const auto primes = primes_up_to_root(X);
  // pair sum -> (ordered pair count, per-product counts)
  std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, std::uint64_t>> groups;
  for (auto a : primes) {
    for (auto b : primes) ++groups[a * a + b * b][a * b];
  }
  std::uint64_t total = 0;
  for (const auto& [sum, products] : groups) {
    std::uint64_t size = 0, same = 0;
    for (const auto& [prod, k] : products) {
      size += k;
      same += k * k;
    }
    total += size * size - same;
  }
  return total;
}

std::uint64_t diagonal_powers_count(int L) {
  if (L < 1 || L > 62) throw std::domain_error("diagonal_powers_count: need 1 <= L <= 62");
  std::uint64_t count = 0;
  for (int a = 1; a <= L; ++a) {
    for (int b = 1; b <= L; ++b) {
      const std::uint64_t left = (std::uint64_t{1} << a) + (std::uint64_t{1} << b);
      for (int c = 1; c <= L; ++c) {
        for (int d = 1; d <= L; ++d) {
          if ((std::uint64_t{1} << c) + (std::uint64_t{1} << d) == left) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace dioph

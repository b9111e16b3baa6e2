#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dioph {

/// Reduced integer fraction with a positive denominator.
///
/// Backed by GMP; every constructor canonicalizes, so gcd(|num|, den) = 1
/// holds for every live value.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long numerator);  // NOLINT(google-explicit-constructor)
  ExactRational(long numerator, long denominator);
  ExactRational(const mpz_class& numerator, const mpz_class& denominator);
  explicit ExactRational(const mpq_class& value);

  /// Parses "a", "-a" or "a/b" (whitespace around '/' is allowed).
  static ExactRational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }
  ExactRational abs() const;
  ExactRational reciprocal() const;

  /// "a/b", or "a" when the denominator is one.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  friend ExactRational operator-(const ExactRational& x);

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

/// Exact sum of many rationals by pairwise (binary-splitting) reduction.
/// Far cheaper than left-to-right accumulation when denominators are coprime.
ExactRational sum_exact(std::vector<ExactRational> terms);

}  // namespace dioph

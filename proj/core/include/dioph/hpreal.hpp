#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "dioph/rational.hpp"

namespace dioph {

/// Decimal-precision real number.
///
/// Wraps an MPFR value whose mantissa holds `digits()` significant decimal
/// digits plus guard bits. Binary operations run at, and return, the smaller
/// precision of the two operands. Comparisons are exact on the stored
/// mantissas.
class HPReal {
 public:
  static constexpr unsigned kDefaultDigits = 50;
  /// Floor for anything that feeds a named constant.
  static constexpr unsigned kMinConstantDigits = 30;

  HPReal();
  explicit HPReal(long value, unsigned digits = kDefaultDigits);
  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  /// Decimal literal such as "-12.5e-3". Throws std::invalid_argument.
  static HPReal parse(std::string_view text, unsigned digits = kDefaultDigits);
  static HPReal from_rational(const ExactRational& q, unsigned digits = kDefaultDigits);
  static HPReal from_integer(const mpz_class& z, unsigned digits = kDefaultDigits);
  static HPReal from_double(double x, unsigned digits = kDefaultDigits);

  static HPReal pi(unsigned digits = kDefaultDigits);
  static HPReal log2(unsigned digits = kDefaultDigits);
  static HPReal euler_gamma(unsigned digits = kDefaultDigits);

  unsigned digits() const { return digits_; }
  /// Same value carried at a different precision (rounded if narrower).
  HPReal with_digits(unsigned digits) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  double to_double() const;
  mpz_class floor() const;
  mpz_class ceil() const;
  /// |x - round(x)|.
  HPReal distance_to_integer() const;

  /// Up to `significant` digits (default: all carried digits), plain
  /// positional notation when the exponent is moderate, otherwise "d.ddde±N".
  std::string to_string(unsigned significant = 0) const;

  HPReal& operator+=(const HPReal& rhs);
  HPReal& operator-=(const HPReal& rhs);
  HPReal& operator*=(const HPReal& rhs);
  HPReal& operator/=(const HPReal& rhs);

  friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
  friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
  friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
  friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
  friend HPReal operator+(HPReal a, long b) { return a += HPReal(b, a.digits_); }
  friend HPReal operator-(HPReal a, long b) { return a -= HPReal(b, a.digits_); }
  friend HPReal operator*(HPReal a, long b) { return a *= HPReal(b, a.digits_); }
  friend HPReal operator/(HPReal a, long b) { return a /= HPReal(b, a.digits_); }
  friend HPReal operator*(long a, const HPReal& b) { return b * a; }
  friend HPReal operator-(long a, const HPReal& b) { return HPReal(a, b.digits_) - b; }
  friend HPReal operator+(long a, const HPReal& b) { return b + a; }
  friend HPReal operator/(long a, const HPReal& b) { return HPReal(a, b.digits_) / b; }
  friend HPReal operator-(const HPReal& x);

  friend bool operator==(const HPReal& a, const HPReal& b);
  friend std::partial_ordering operator<=>(const HPReal& a, const HPReal& b);
  friend bool operator==(const HPReal& a, long b) { return a == HPReal(b, a.digits_); }
  friend std::partial_ordering operator<=>(const HPReal& a, long b) { return a <=> HPReal(b, a.digits_); }

  friend HPReal abs(const HPReal& x);
  friend HPReal sqrt(const HPReal& x);
  friend HPReal log(const HPReal& x);
  friend HPReal exp(const HPReal& x);
  friend HPReal pow(const HPReal& base, const HPReal& exponent);
  friend HPReal pow(const HPReal& base, long exponent);
  friend HPReal min(const HPReal& a, const HPReal& b);
  friend HPReal max(const HPReal& a, const HPReal& b);

  mpfr_srcptr raw() const { return value_; }

 private:
  struct Uninit {};
  HPReal(Uninit, unsigned digits);
  static mpfr_prec_t bits_for(unsigned digits);

  mpfr_t value_;
  unsigned digits_;
};

}  // namespace dioph

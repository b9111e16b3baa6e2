#include "dioph/hpreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dioph {

namespace {
constexpr mpfr_rnd_t kRound = MPFR_RNDN;
constexpr unsigned kGuardBits = 16;
}  // namespace

mpfr_prec_t HPReal::bits_for(unsigned digits) {
  if (digits == 0) throw std::invalid_argument("HPReal: precision must be at least one digit");
  // log2(10) = 3.32192809...
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + kGuardBits;
}

HPReal::HPReal(Uninit, unsigned digits) : digits_(digits) { mpfr_init2(value_, bits_for(digits)); }

HPReal::HPReal() : HPReal(0L, kDefaultDigits) {}

HPReal::HPReal(long value, unsigned digits) : HPReal(Uninit{}, digits) { mpfr_set_si(value_, value, kRound); }

HPReal::HPReal(const HPReal& other) : HPReal(Uninit{}, other.digits_) { mpfr_set(value_, other.value_, kRound); }

HPReal::HPReal(HPReal&& other) noexcept : HPReal(other) {}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, bits_for(digits_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

HPReal::~HPReal() { mpfr_clear(value_); }

HPReal HPReal::parse(std::string_view text, unsigned digits) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '_'; }), s.end());
  if (s.empty()) throw std::invalid_argument("HPReal: empty decimal literal");
  if (s.front() == '+') s.erase(0, 1);
  HPReal r(Uninit{}, digits);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRound);
  if (end == s.c_str() || *end != '\0') throw std::invalid_argument("HPReal: malformed decimal literal '" + s + "'");
  return r;
}

HPReal HPReal::from_rational(const ExactRational& q, unsigned digits) {
  HPReal r(Uninit{}, digits);
  mpfr_set_q(r.value_, q.raw().get_mpq_t(), kRound);
  return r;
}

HPReal HPReal::from_integer(const mpz_class& z, unsigned digits) {
  HPReal r(Uninit{}, digits);
  mpfr_set_z(r.value_, z.get_mpz_t(), kRound);
  return r;
}

HPReal HPReal::from_double(double x, unsigned digits) {
  HPReal r(Uninit{}, digits);
  mpfr_set_d(r.value_, x, kRound);
  return r;
}

HPReal HPReal::pi(unsigned digits) {
  HPReal r(Uninit{}, digits);
  mpfr_const_pi(r.value_, kRound);
  return r;
}

HPReal HPReal::log2(unsigned digits) {
  HPReal r(Uninit{}, digits);
  mpfr_const_log2(r.value_, kRound);
  return r;
}

HPReal HPReal::euler_gamma(unsigned digits) {
  HPReal r(Uninit{}, digits);
  mpfr_const_euler(r.value_, kRound);
  return r;
}

HPReal HPReal::with_digits(unsigned digits) const {
  HPReal r(Uninit{}, digits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

int HPReal::sign() const { return mpfr_sgn(value_); }

double HPReal::to_double() const { return mpfr_get_d(value_, kRound); }

mpz_class HPReal::floor() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

mpz_class HPReal::ceil() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDU);
  return z;
}

HPReal HPReal::distance_to_integer() const {
  HPReal nearest(Uninit{}, digits_);
  mpfr_round(nearest.value_, value_);
  return abs(*this - nearest);
}

std::string HPReal::to_string(unsigned significant) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  const unsigned n = significant == 0 ? digits_ : std::min(significant, digits_);
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, n, value_, kRound);
  std::string mant(raw);
  mpfr_free_str(raw);
  bool negative = false;
  if (!mant.empty() && mant.front() == '-') {
    negative = true;
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

  // value = 0.mant * 10^exponent
  std::string out;
  const long e = static_cast<long>(exponent);
  if (e > -6 && e <= static_cast<long>(n)) {
    if (e <= 0) {
      out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
    } else if (static_cast<std::size_t>(e) >= mant.size()) {
      out = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
    }
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    const long sci = e - 1;
    out += (sci < 0 ? "e-" : "e+") + std::to_string(sci < 0 ? -sci : sci);
  }
  return negative ? "-" + out : out;
}

HPReal& HPReal::operator+=(const HPReal& rhs) {
  const unsigned d = std::min(digits_, rhs.digits_);
  if (d != digits_) *this = with_digits(d);
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& rhs) {
  const unsigned d = std::min(digits_, rhs.digits_);
  if (d != digits_) *this = with_digits(d);
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& rhs) {
  const unsigned d = std::min(digits_, rhs.digits_);
  if (d != digits_) *this = with_digits(d);
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

HPReal& HPReal::operator/=(const HPReal& rhs) {
  if (rhs.is_zero()) throw std::domain_error("HPReal: division by zero");
  const unsigned d = std::min(digits_, rhs.digits_);
  if (d != digits_) *this = with_digits(d);
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

HPReal operator-(const HPReal& x) {
  HPReal r(HPReal::Uninit{}, x.digits_);
  mpfr_neg(r.value_, x.value_, kRound);
  return r;
}

bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const HPReal& a, const HPReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

HPReal abs(const HPReal& x) {
  HPReal r(HPReal::Uninit{}, x.digits_);
  mpfr_abs(r.value_, x.value_, kRound);
  return r;
}

HPReal sqrt(const HPReal& x) {
  if (x.sign() < 0) throw std::domain_error("HPReal: sqrt of a negative value");
  HPReal r(HPReal::Uninit{}, x.digits_);
  mpfr_sqrt(r.value_, x.value_, kRound);
  return r;
}

HPReal log(const HPReal& x) {
  if (x.sign() <= 0) throw std::domain_error("HPReal: log of a non-positive value");
  HPReal r(HPReal::Uninit{}, x.digits_);
  mpfr_log(r.value_, x.value_, kRound);
  return r;
}

HPReal exp(const HPReal& x) {
  HPReal r(HPReal::Uninit{}, x.digits_);
  mpfr_exp(r.value_, x.value_, kRound);
  return r;
}

HPReal pow(const HPReal& base, const HPReal& exponent) {
  HPReal r(HPReal::Uninit{}, std::min(base.digits_, exponent.digits_));
  mpfr_pow(r.value_, base.value_, exponent.value_, kRound);
  return r;
}

HPReal pow(const HPReal& base, long exponent) {
  HPReal r(HPReal::Uninit{}, base.digits_);
  mpfr_pow_si(r.value_, base.value_, exponent, kRound);
  return r;
}

HPReal min(const HPReal& a, const HPReal& b) { return (b < a) ? b : a; }
HPReal max(const HPReal& a, const HPReal& b) { return (a < b) ? b : a; }

}  // namespace dioph

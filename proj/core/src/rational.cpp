#include "dioph/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dioph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::size_t digits_from = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == digits_from) throw std::invalid_argument("empty integer in rational literal");
  for (std::size_t i = digits_from; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

ExactRational::ExactRational(long numerator) : value_(numerator) {}

ExactRational::ExactRational(long numerator, long denominator)
    : ExactRational(mpz_class(numerator), mpz_class(denominator)) {}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("ExactRational: zero denominator");
  value_.get_num() = numerator;
  value_.get_den() = denominator;
  value_.canonicalize();
}

ExactRational::ExactRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_integer(text), mpz_class(1));
  return ExactRational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

ExactRational ExactRational::abs() const { return ExactRational(mpq_class(::abs(value_))); }

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("ExactRational: reciprocal of zero");
  return ExactRational(value_.get_den(), value_.get_num());
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational operator-(const ExactRational& x) { return ExactRational(mpq_class(-x.value_)); }

ExactRational sum_exact(std::vector<ExactRational> terms) {
  if (terms.empty()) return ExactRational(0);
  while (terms.size() > 1) {
    std::vector<ExactRational> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return terms.front();
}

}  // namespace dioph

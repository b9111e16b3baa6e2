#include "dioph/system.hpp"

#include <algorithm>
#include <utility>

namespace dioph {

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  return s;
}

HPReal parse_scalar(const std::string& s, unsigned digits) {
  if (s.find('/') != std::string::npos) return HPReal::from_rational(ExactRational::parse(s), digits);
  return HPReal::parse(s, digits);
}

HPReal parse_field(const std::string& name, std::string_view text, unsigned digits) {
  try {
    return parse_real(text, digits);
  } catch (const std::exception& e) {
    throw ValidationError(name + ": " + e.what());
  }
}

}  // namespace

HPReal parse_real(std::string_view text, unsigned digits) {
  const std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty real literal");
  const auto at = s.find("sqrt(");
  if (at == std::string::npos) return parse_scalar(s, digits);

  const auto close = s.find(')', at);
  if (close == std::string::npos || close + 1 != s.size()) {
    throw std::invalid_argument("malformed surd '" + s + "'");
  }
  const std::string radicand = s.substr(at + 5, close - at - 5);
  if (radicand.empty() || !std::all_of(radicand.begin(), radicand.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("surd radicand must be a nonnegative integer in '" + s + "'");
  }
  std::string coef = s.substr(0, at);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  HPReal c(1, digits);
  if (coef == "-") {
    c = HPReal(-1, digits);
  } else if (!coef.empty() && coef != "+") {
    c = parse_scalar(coef, digits);
  }
  return c * sqrt(HPReal::from_integer(mpz_class(radicand, 10), digits));
}

std::uint64_t CoefficientSystem::q_u64(std::size_t i) const {
  const mpz_class d = q(i);
  if (!d.fits_ulong_p()) throw std::overflow_error("ratio denominator does not fit 64 bits");
  return d.get_ui();
}

bool CoefficientSystem::canonical_major_arc_signs() const {
  return lambda[0].sign() < 0 && lambda[1].sign() > 0 && lambda[2].sign() > 0;
}

HPReal CoefficientSystem::sum_abs_lambda() const { return abs(lambda[0]) + abs(lambda[1]) + abs(lambda[2]); }

HPReal CoefficientSystem::sum_abs_mu(std::size_t s) const {
  if (s > mu.size()) throw std::out_of_range("sum_abs_mu: system has only " + std::to_string(mu.size()) + " mu coefficients");
  HPReal total(0, digits());
  for (std::size_t i = 0; i < s; ++i) total += abs(mu[i]);
  return total;
}

FormCoefficients CoefficientSystem::form(std::size_t s) const {
  if (s > mu.size()) throw std::out_of_range("form: system has only " + std::to_string(mu.size()) + " mu coefficients");
  FormCoefficients f;
  for (std::size_t i = 0; i < 3; ++i) f.lambda[i] = lambda[i].to_double();
  for (std::size_t i = 0; i < s; ++i) f.mu.push_back(mu[i].to_double());
  f.varpi = varpi.to_double();
  f.eta = eta.to_double();
  return f;
}

CoefficientSystem validate_system(const RawSystem& raw) {
  const unsigned digits = raw.digits;
  CoefficientSystem sys;
  for (std::size_t i = 0; i < 3; ++i) {
    sys.lambda[i] = parse_field("lambda" + std::to_string(i + 1), raw.lambda[i], digits);
    if (sys.lambda[i].is_zero()) throw ValidationError("lambda" + std::to_string(i + 1) + " must be nonzero");
    try {
      sys.ratio[i] = ExactRational::parse(strip(raw.ratio[i]));
    } catch (const std::exception& e) {
      throw ValidationError("ratio" + std::to_string(i + 1) + ": " + e.what());
    }
    if (sys.ratio[i].is_zero()) throw ValidationError("ratio" + std::to_string(i + 1) + " must be nonzero (mu would be infinite)");
  }
  const int s0 = sys.lambda[0].sign(), s1 = sys.lambda[1].sign(), s2 = sys.lambda[2].sign();
  if (s0 == s1 && s1 == s2) throw ValidationError("lambda1, lambda2, lambda3 must not all have the same sign");

  sys.varpi = parse_field("varpi", raw.varpi.empty() ? "0" : raw.varpi, digits);
  sys.eta = parse_field("eta", raw.eta, digits);
  sys.eps = parse_field("eps", raw.eps, digits);
  if (sys.eta.sign() <= 0) throw ValidationError("eta must be positive");
  if (sys.eps.sign() <= 0) throw ValidationError("eps must be positive");

  for (std::size_t i = 0; i < 3; ++i) sys.mu.push_back(sys.lambda[i] / HPReal::from_rational(sys.ratio[i], digits));
  for (std::size_t j = 0; j < raw.extra_mu.size(); ++j) {
    HPReal m = parse_field("mu" + std::to_string(j + 4), raw.extra_mu[j], digits);
    if (m.is_zero()) throw ValidationError("mu" + std::to_string(j + 4) + " must be nonzero");
    sys.mu.push_back(std::move(m));
  }
  sys.ratio_irrational = raw.ratio_irrational;

  if (sys.lambda[0].sign() > 0) {
    for (auto& l : sys.lambda) l = -l;
    for (auto& m : sys.mu) m = -m;
    sys.varpi = -sys.varpi;
    sys.negated = true;
  }
  if (sys.lambda[1].sign() > 0 && sys.lambda[2].sign() < 0) {
    std::swap(sys.lambda[1], sys.lambda[2]);
    std::swap(sys.ratio[1], sys.ratio[2]);
    std::swap(sys.mu[1], sys.mu[2]);
    sys.swapped = true;
  }

  sys.eta_limit = abs(sys.lambda[0] / HPReal::from_integer(sys.a(0), digits));
  for (std::size_t i = 1; i < 3; ++i) {
    sys.eta_limit = min(sys.eta_limit, abs(sys.lambda[i] / HPReal::from_integer(sys.a(i), digits)));
  }
  sys.eta_warning = !(sys.eta < sys.eta_limit);
  return sys;
}

}  // namespace dioph

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/hpreal.hpp"
#include "dioph/rational.hpp"

namespace dioph {

/// Rejected input. The message names the offending field.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a real literal at `digits` precision. Accepted forms:
///   decimal          "-1.25e-3"
///   rational         "3/2"
///   surd             "sqrt(5)", "-sqrt(5)", "c*sqrt(d)" with c decimal or rational, d integer >= 0
HPReal parse_real(std::string_view text, unsigned digits = HPReal::kDefaultDigits);

/// User-facing description of lambda_1 p_1 + lambda_2 p_2^2 + lambda_3 p_3^2 +
/// mu_1 2^{m_1} + ... + varpi, before validation.
struct RawSystem {
  std::array<std::string, 3> lambda;
  /// lambda_i / mu_i as exact rationals a_i/q_i.
  std::array<std::string, 3> ratio;
  /// mu_4, mu_5, ... (free coefficients).
  std::vector<std::string> extra_mu;
  std::string varpi = "0";
  std::string eta;
  std::string eps;
  /// The caller's claim that lambda_2/lambda_3 is irrational; not checkable.
  bool ratio_irrational = true;
  unsigned digits = HPReal::kDefaultDigits;
};

/// Plain double view of a system for the numerical evaluators.
struct FormCoefficients {
  std::array<double, 3> lambda{};
  std::vector<double> mu;
  double varpi = 0.0;
  double eta = 0.0;
};

/// Validated, canonically arranged coefficient system.
///
/// Canonical arrangement: lambda_1 < 0, and if lambda_2, lambda_3 differ in
/// sign then lambda_2 < 0 < lambda_3. Getting there may negate the whole
/// form (lambda, mu, varpi) and swap the two square terms; both leave the
/// solution set and s0 unchanged and are recorded in the flags.
struct CoefficientSystem {
  std::array<HPReal, 3> lambda;
  std::array<ExactRational, 3> ratio;
  /// mu_1..mu_3 derived as lambda_i / ratio_i, then the free ones.
  std::vector<HPReal> mu;
  HPReal varpi;
  HPReal eta;
  HPReal eps;

  /// min |lambda_i / a_i|; eta must stay below it for the theorem.
  HPReal eta_limit;
  bool eta_warning = false;
  bool negated = false;
  bool swapped = false;
  bool ratio_irrational = true;

  unsigned digits() const { return eta.digits(); }
  /// Numerator a_i (carries the sign) and denominator q_i of ratio_i.
  mpz_class a(std::size_t i) const { return ratio.at(i).numerator(); }
  mpz_class q(std::size_t i) const { return ratio.at(i).denominator(); }
  std::uint64_t q_u64(std::size_t i) const;
  bool canonical_major_arc_signs() const;

  HPReal sum_abs_lambda() const;
  /// Sum of |mu_i| over the first s coefficients.
  HPReal sum_abs_mu(std::size_t s) const;
  /// Double view using the first s mu coefficients.
  FormCoefficients form(std::size_t s) const;
};

CoefficientSystem validate_system(const RawSystem& raw);

}  // namespace dioph

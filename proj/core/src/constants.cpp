#include "dioph/constants.hpp"

#include <stdexcept>

#include "dioph/number_theory.hpp"
#include "dioph/singular_series.hpp"

namespace dioph {

namespace {

void require_constant_precision(unsigned digits) {
  if (digits < HPReal::kMinConstantDigits) {
    throw std::invalid_argument("constants need at least " + std::to_string(HPReal::kMinConstantDigits) + " digits");
  }
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::paper_literal:
      return "paper-literal";
    case Provenance::computed:
      return "computed";
    case Provenance::computed_with_crosscheck:
      return "computed-with-paper-crosscheck";
  }
  return "unknown";
}

NamedConstant constant_C(unsigned digits) {
  require_constant_precision(digits);
  return {"C", HPReal::parse(kLiteralC, digits), Provenance::paper_literal};
}

NamedConstant constant_c4(unsigned digits) {
  require_constant_precision(digits);
  return {"c4", HPReal::from_integer(mpz_class(static_cast<unsigned long>(kC4)), digits), Provenance::paper_literal};
}

std::vector<C5Term> c5_terms(std::uint64_t d_max) {
  std::vector<C5Term> terms;
  for (std::uint64_t d = 1; d <= d_max; d += 2) {
    if (d > 1 && mobius(d) == 0) continue;
    terms.push_back({d, mult_order_2(d)});
  }
  return terms;
}

ExactRational c5_partial_sum_exact(std::uint64_t d_max) {
  if (d_max == 0) throw std::domain_error("c5_partial_sum: d_max must be positive");
  std::vector<ExactRational> parts;
  for (const auto& t : c5_terms(d_max)) {
    parts.emplace_back(mpz_class(1), mpz_class(static_cast<unsigned long>(t.d)) * static_cast<unsigned long>(t.order));
  }
  return sum_exact(std::move(parts));
}

HPReal c5_partial_sum(std::uint64_t d_max, unsigned digits) {
  return HPReal::from_rational(c5_partial_sum_exact(d_max), digits);
}

NamedConstant constant_D(DMode mode, unsigned digits) {
  require_constant_precision(digits);
  if (mode.kind == DMode::Kind::paper_literal) {
    return {"D", HPReal::parse(kLiteralD, digits), Provenance::paper_literal};
  }
  const HPReal c4 = constant_c4(digits).value;
  const HPReal pi = HPReal::pi(digits);
  HPReal value = c4 * c5_partial_sum(mode.d_max, digits) * pi * pi / 96;
  return {"D(recomputed, d<=" + std::to_string(mode.d_max) + ")", std::move(value), Provenance::computed_with_crosscheck};
}

HPReal constant_D_from_c5_bound(unsigned digits) {
  require_constant_precision(digits);
  const HPReal pi = HPReal::pi(digits);
  return constant_c4(digits).value * HPReal::parse(kLiteralC5Bound, digits) * pi * pi / 96;
}

NamedConstant constant_D1(unsigned digits) {
  require_constant_precision(digits);
  const HPReal pi = HPReal::pi(digits);
  mpz_class two27;
  mpz_ui_pow_ui(two27.get_mpz_t(), 2, 27);
  HPReal value = HPReal(11 * 11 * 11 * 11 * 43, digits) * pow(pi, 26) / (HPReal::from_integer(two27, digits) * 25);
  return {"D1", std::move(value), Provenance::computed_with_crosscheck};
}

NamedConstant constant_nu(unsigned digits) {
  require_constant_precision(digits);
  return {"nu", HPReal::parse(kLiteralNu, digits), Provenance::paper_literal};
}

NamedConstant constant_gamma(unsigned digits) {
  require_constant_precision(digits);
  return {"gamma", HPReal::euler_gamma(digits), Provenance::computed};
}

NamedConstant constant_c0(unsigned digits) {
  require_constant_precision(digits);
  return {"c0", c0_midpoint(digits), Provenance::paper_literal};
}

HPReal capital_C(std::uint64_t q1, std::uint64_t q2, std::uint64_t q3, const HPReal& eps) {
  if (eps.sign() <= 0) throw std::domain_error("capital_C: eps must be positive");
  if (q1 == 0 || q2 == 0 || q3 == 0) throw std::domain_error("capital_C: q_i must be positive");
  const unsigned digits = eps.digits();
  require_constant_precision(digits);
  const HPReal log2 = HPReal::log2(digits);
  const HPReal log2sq = log2 * log2;
  const HPReal C = constant_C(digits).value;
  const HPReal D = constant_D(DMode::paper_literal(), digits).value;
  const HPReal quarter = HPReal(1, digits) / 4;

  const HPReal first = sqrt(log2 + C * sigma_prime(q1, digits).decimal);
  const HPReal second = pow(log2sq + D * sigma_double_prime(q2, digits).decimal, quarter);
  const HPReal third = pow(log2sq + D * sigma_double_prime(q3, digits).decimal, quarter);
  return (1 + eps) * first * second * third;
}

std::vector<NamedConstant> all_named_constants(unsigned digits) {
  return {constant_C(digits), constant_c4(digits), constant_D(DMode::paper_literal(), digits), constant_D1(digits),
          constant_nu(digits), constant_gamma(digits), constant_c0(digits)};
}

}  // namespace dioph

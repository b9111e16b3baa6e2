#include "dioph/s0.hpp"

#include "dioph/constants.hpp"

namespace dioph {

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("s0 does not fit in 64 bits");
  return z.get_si();
}

bool near_integer(const HPReal& x) {
  return x.distance_to_integer() < pow(HPReal(10, x.digits()), kCeilingGuardExponent);
}

HPReal three_minus_2sqrt2(unsigned digits) { return 3 - 2 * sqrt(HPReal(2, digits)); }

}  // namespace

HPReal major_arc_c1(const CoefficientSystem& sys) {
  return (three_minus_2sqrt2(sys.digits()) - sys.eps) / (4 * sys.sum_abs_lambda());
}

HPReal minor_arc_c2(const CoefficientSystem& sys, std::int64_t s) {
  const HPReal nu = constant_nu(sys.digits()).value;
  return pow(nu, static_cast<long>(s - 3)) * capital_C(sys.q_u64(0), sys.q_u64(1), sys.q_u64(2), sys.eps);
}

void compute_s0(const CoefficientSystem& sys, S0Report& r) {
  const unsigned digits = sys.digits();
  r.capital_C = capital_C(sys.q_u64(0), sys.q_u64(1), sys.q_u64(2), sys.eps);
  r.sum_abs_lambda = sys.sum_abs_lambda();
  r.numerator = log(4 * r.capital_C * r.sum_abs_lambda) - log((three_minus_2sqrt2(digits) - sys.eps) * sys.eta);
  r.denominator = -log(constant_nu(digits).value);
  r.ceiling_argument = r.numerator / r.denominator;
  r.s0_ours = 3 + to_int64(r.ceiling_argument.ceil());
  r.ours_near_integer = near_integer(r.ceiling_argument);

  r.c1 = major_arc_c1(sys);
  r.c2_at_s0 = minor_arc_c2(sys, r.s0_ours);
  r.c2_at_s0_minus_1 = minor_arc_c2(sys, r.s0_ours - 1);
  const HPReal target = r.c1 * sys.eta;
  r.arc_condition_holds = r.c2_at_s0 < target && !(r.c2_at_s0_minus_1 < target);
}

void compute_s0_liwang(const CoefficientSystem& sys, S0Report& r) {
  const unsigned digits = sys.digits();
  const HPReal log2 = HPReal::log2(digits);
  r.liwang_inner = constant_D1(digits).value;

  auto log_2q = [&](std::size_t i) { return log(2 * HPReal::from_integer(sys.q(i), digits)); };
  const HPReal half = HPReal(1, digits) / 2;
  const HPReal quarter = HPReal(1, digits) / 4;
  r.C1_liwang = 5 * (1 + sys.eps) * sqrt(r.liwang_inner + log2 * log2) * pow(log_2q(0), half) *
                pow(log_2q(1), quarter) * pow(log_2q(2), quarter);

  const HPReal sum = sys.sum_abs_lambda();
  r.liwang_numerator =
      log(512 * r.C1_liwang * sum * sum) - log((1 - sys.eps) * abs(sys.lambda[0]) * sys.eta);
  r.liwang_denominator = -log(HPReal::parse(kLiteralLiWangNu, digits));
  r.liwang_ceiling_argument = r.liwang_numerator / r.liwang_denominator;
  r.s0_liwang = 3 + to_int64(r.liwang_ceiling_argument.ceil());
  r.liwang_near_integer = near_integer(r.liwang_ceiling_argument);
}

HPReal gain_ratio(unsigned digits) {
  return 1 - log(HPReal::parse(kLiteralLiWangNu, digits)) / log(HPReal::parse(kLiteralNu, digits));
}

S0Report build_s0_report(const CoefficientSystem& sys) {
  S0Report r;
  compute_s0(sys, r);
  compute_s0_liwang(sys, r);
  r.gain = gain_ratio(sys.digits());
  return r;
}

}  // namespace dioph

#pragma once

#include <cstdint>
#include <optional>

#include "dioph/hpreal.hpp"
#include "dioph/system.hpp"

namespace dioph {

/// Ceilings closer than this to an integer are flagged: a precision artifact
/// there would move s0 by one.
inline constexpr long kCeilingGuardExponent = -20;

struct S0Report {
  // Sufficient number of powers of two, improved formula.
  HPReal capital_C;
  HPReal sum_abs_lambda;
  HPReal numerator;    // log(4 C(q) sum|lambda|) - log((3 - 2 sqrt 2 - eps) eta)
  HPReal denominator;  // -log nu
  HPReal ceiling_argument;
  std::int64_t s0_ours = 0;
  bool ours_near_integer = false;

  // Major/minor arc constants at s0.
  HPReal c1;               // (3 - 2 sqrt 2 - eps) / (4 sum|lambda|)
  HPReal c2_at_s0;         // nu^{s0-3} C(q)
  HPReal c2_at_s0_minus_1;
  bool arc_condition_holds = false;  // c2(s0) < c1 eta <= c2(s0 - 1)

  // Li-Wang comparison.
  HPReal liwang_inner;     // 11^4 43 pi^26 / (2^27 25)
  HPReal C1_liwang;
  HPReal liwang_numerator;
  HPReal liwang_denominator;  // -log 0.995
  HPReal liwang_ceiling_argument;
  std::int64_t s0_liwang = 0;
  bool liwang_near_integer = false;

  HPReal gain;
};

/// Fills the improved-formula fields (capital_C .. arc_condition_holds).
void compute_s0(const CoefficientSystem& sys, S0Report& report);

/// Fills the Li-Wang fields.
void compute_s0_liwang(const CoefficientSystem& sys, S0Report& report);

/// Both formulas plus the gain ratio.
S0Report build_s0_report(const CoefficientSystem& sys);

/// 1 - log(0.995) / log(nu): how much larger the new denominator is.
HPReal gain_ratio(unsigned digits = HPReal::kDefaultDigits);

/// c1 = (3 - 2 sqrt 2 - eps) / (4 sum|lambda|).
HPReal major_arc_c1(const CoefficientSystem& sys);

/// c2(s) = nu^{s-3} C(q1, q2, q3, eps).
HPReal minor_arc_c2(const CoefficientSystem& sys, std::int64_t s);

}  // namespace dioph

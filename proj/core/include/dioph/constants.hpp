#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/hpreal.hpp"
#include "dioph/rational.hpp"

namespace dioph {

enum class Provenance { paper_literal, computed, computed_with_crosscheck };

std::string_view to_string(Provenance p);

struct NamedConstant {
  std::string name;
  HPReal value;
  Provenance provenance = Provenance::computed;
};

// Published literals, verbatim.
inline constexpr std::string_view kLiteralC = "10.0219168340";
inline constexpr std::string_view kLiteralD = "17646979.6536361512";
inline constexpr std::string_view kLiteralD1 = "1581925383.0798448770";
inline constexpr std::string_view kLiteralNu = "0.8844472132";
inline constexpr std::string_view kLiteralC5Bound = "1.620767";
inline constexpr std::string_view kLiteralLiWangNu = "0.995";
inline constexpr std::uint64_t kC4 = 101ULL << 20;  // 101 * 2^20

/// The quadratic-form constant of the prime/power-of-two mean value.
NamedConstant constant_C(unsigned digits = HPReal::kDefaultDigits);

/// c4 = 101 * 2^20, exactly.
NamedConstant constant_c4(unsigned digits = HPReal::kDefaultDigits);

/// Exact partial sum over odd squarefree d <= d_max of 1 / (d * ord_d(2)),
/// with the d = 1 term equal to 1. Every partial sum is a certified lower
/// bound for c5 since all terms are positive.
ExactRational c5_partial_sum_exact(std::uint64_t d_max);
HPReal c5_partial_sum(std::uint64_t d_max, unsigned digits = HPReal::kDefaultDigits);

/// One c5 series term 1/(d * order): odd squarefree d with ord_d(2).
struct C5Term {
  std::uint64_t d;
  std::uint64_t order;
};
/// Terms in increasing d.
std::vector<C5Term> c5_terms(std::uint64_t d_max);

/// How constant_D is produced.
struct DMode {
  enum class Kind { paper_literal, recomputed } kind = Kind::paper_literal;
  std::uint64_t d_max = 0;

  static DMode paper_literal() { return {}; }
  static DMode recomputed(std::uint64_t d_max) { return {Kind::recomputed, d_max}; }
};

/// D = c4 c5 pi^2 / 96. Literal mode returns the published value; recomputed
/// mode substitutes the exact c5 partial sum up to d_max.
NamedConstant constant_D(DMode mode = DMode::paper_literal(), unsigned digits = HPReal::kDefaultDigits);

/// D evaluated with c5 replaced by its published upper bound 1.620767.
HPReal constant_D_from_c5_bound(unsigned digits = HPReal::kDefaultDigits);

/// The competing constant D1 = 11^4 * 43 * pi^26 / (2^27 * 25).
NamedConstant constant_D1(unsigned digits = HPReal::kDefaultDigits);

/// The exceptional-set threshold for |G(alpha)| <= nu L.
NamedConstant constant_nu(unsigned digits = HPReal::kDefaultDigits);

NamedConstant constant_gamma(unsigned digits = HPReal::kDefaultDigits);
NamedConstant constant_c0(unsigned digits = HPReal::kDefaultDigits);

/// C(q1,q2,q3,eps) = (1+eps) (log 2 + C S'(q1))^{1/2}
///                   (log^2 2 + D S''(q2))^{1/4} (log^2 2 + D S''(q3))^{1/4}
/// with the literal C and D.
HPReal capital_C(std::uint64_t q1, std::uint64_t q2, std::uint64_t q3, const HPReal& eps);

/// Every constant above in a fixed order, for reports.
std::vector<NamedConstant> all_named_constants(unsigned digits = HPReal::kDefaultDigits);

}  // namespace dioph

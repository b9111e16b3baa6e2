#include "dioph/continued_fraction.hpp"

#include <stdexcept>

namespace dioph {

ContinuedFraction continued_fraction(const HPReal& x, unsigned n_terms) {
  if (x.sign() <= 0) throw std::domain_error("continued_fraction: x must be positive");
  ContinuedFraction out;
  const unsigned digits = x.digits();
  const unsigned usable = digits > 4 ? digits - 4 : 1;
  mpz_class q_limit;
  mpz_ui_pow_ui(q_limit.get_mpz_t(), 10, usable);
  const HPReal tiny = pow(HPReal(10, digits), -static_cast<long>(usable));

  mpz_class p_prev2 = 0, p_prev1 = 1;  // p_{-2}, p_{-1}
  mpz_class q_prev2 = 1, q_prev1 = 0;
  HPReal rem = x;
  for (unsigned k = 0; k < n_terms; ++k) {
    const mpz_class a = rem.floor();
    mpz_class p = a * p_prev1 + p_prev2;
    mpz_class q = a * q_prev1 + q_prev2;
    if (q * q >= q_limit) {
      out.truncated = true;
      break;
    }
    out.partial_quotients.push_back(a);
    HPReal value = HPReal::from_integer(p, digits) / HPReal::from_integer(q, digits);
    out.convergents.push_back({p, q, std::move(value)});
    p_prev2 = p_prev1;
    p_prev1 = p;
    q_prev2 = q_prev1;
    q_prev1 = q;

    HPReal frac = rem - HPReal::from_integer(a, digits);
    // A remainder below the working precision is a rational input.
    if (frac < tiny) {
      out.terminated = true;
      break;
    }
    rem = HPReal(1, digits) / frac;
  }
  return out;
}

}  // namespace dioph

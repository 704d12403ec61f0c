#include "gkpsim/quditgkp.hpp"

#include <cmath>

namespace gkpsim {

QuditRoundResult qudit_round(const QuditParams& params, const QuditError& err) {
  const int d = params.d, r = params.r;
  QuditRoundResult res;

  // After CNOT, error, inverse CNOT, the joint state carries
  //   data:    X^{a1} Z^{c1 + c2}
  //   ancilla: X^{a2 - a1} Z^{c2}
  // and the ancilla stabilizer measurement reads both exponents modulo r.
  int diff = centered_mod(err.a2 - err.a1, d);
  int c2 = centered_mod(err.c2, d);
  res.syndrome_a = centered_mod(diff, r);
  res.syndrome_c = centered_mod(c2, r);
  res.recovered = 2 * std::abs(diff) < r && 2 * std::abs(c2) < r;

  // recovery: Z^{-syndrome_c} removes the phase kicked back by the ancilla,
  // X^{syndrome_a / 2} averages the two shift errors.  Odd syndromes have no
  // integer half; ties round toward zero (exact only in the even-difference
  // limit, tracked separately by residual_x_half).
  int half = res.syndrome_a / 2;  // C++ division truncates toward zero
  res.residual_x = centered_mod(err.a1 + half, d);
  res.residual_x_half = centered_mod(err.a1, d) + 0.5 * res.syndrome_a;
  res.residual_z = centered_mod(c2 - res.syndrome_c, d);
  return res;
}

}  // namespace gkpsim

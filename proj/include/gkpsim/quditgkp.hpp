#pragma once

// Discrete qudit analogue of the two-mode GKP-repetition code, simulated at
// the level of Pauli exponents.  A data qudit is coupled by a CNOT to an
// ancilla prepared in the canonical qudit-GKP state stabilized by X^r and
// Z^r; after the inverse CNOT the ancilla carries the exponents
// (a2 - a1, c2) which are read out modulo r.

#include <cstdint>
#include <stdexcept>

namespace gkpsim {

struct QuditParams {
  int d = 16;  // qudit dimension
  int r = 4;   // ancilla spacing; requires d % r == 0 and r*r % d == 0

  QuditParams(int d_, int r_) : d(d_), r(r_) {
    if (d < 2) throw std::invalid_argument("QuditParams: d must be >= 2");
    if (r < 1 || d % r != 0)
      throw std::invalid_argument("QuditParams: r must divide d");
    if ((r * r) % d != 0)
      throw std::invalid_argument("QuditParams: r^2 must be 0 mod d");
  }
};

struct QuditError {
  int a1 = 0, c1 = 0;  // X and Z exponents on the data qudit
  int a2 = 0, c2 = 0;  // X and Z exponents on the ancilla
};

/// Centered representative of v modulo m in (-m/2, m/2].
inline int centered_mod(int v, int m) {
  int r = ((v % m) + m) % m;
  return 2 * r > m ? r - m : r;
}

struct QuditRoundResult {
  int syndrome_a = 0;  // (a2 - a1) mod r, centered
  int syndrome_c = 0;  // c2 mod r, centered
  // Data exponents after recovery.  residual_z excludes the intrinsic data
  // phase error c1, which no round of this code can touch: the full data Z
  // exponent is c1 + residual_z.
  int residual_x = 0;
  int residual_z = 0;
  double residual_x_half = 0.0;  // half-integer bookkeeping of the X estimate
  bool recovered = false;        // both true deviations strictly inside r/2
};

QuditRoundResult qudit_round(const QuditParams& params, const QuditError& err);

}  // namespace gkpsim

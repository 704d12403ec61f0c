#pragma once

// Centered modular arithmetic and GKP lattice descriptions.
//
// All syndrome extraction in this library reduces to the remainder map
// R_s(x) = x - s*[x/s] with [.] rounding to the nearest integer.  Values are
// kept in the half-open window [-s/2, s/2); ties at exactly half a period
// land on -s/2 so that repeated reductions are idempotent.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gkpsim {

inline const double kSqrtPi = std::sqrt(M_PI);
inline const double kSqrt2Pi = std::sqrt(2.0 * M_PI);

/// R_s(x) = x - s*[x/s] in [-s/2, s/2).  Half-period ties map to -s/2.
inline double remainder(double x, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("remainder: period must be > 0");
  if (!std::isfinite(x)) throw std::invalid_argument("remainder: x not finite");
  double m = std::floor(x / s + 0.5);
  return x - s * m;
}

/// Componentwise remainder, usable on any Eigen dense expression.
template <typename Derived>
auto remainder_vec(const Eigen::MatrixBase<Derived>& v, double s) {
  if (!(s > 0.0))
    throw std::invalid_argument("remainder_vec: period must be > 0");
  return v.unaryExpr([s](double x) { return remainder(x, s); }).eval();
}

/// Nearest lattice point: x - R_s(x), an exact integer multiple of s.
inline double lattice_round(double x, double s) { return x - remainder(x, s); }

// One-dimensional GKP lattice of a mode, parametrized by the aspect ratio
// alpha: q_period = sqrt(2*pi*alpha), p_period = sqrt(2*pi/alpha), so
// q_period * p_period = 2*pi always.  alpha = 1 is the canonical GKP state,
// alpha = 2 the square-lattice logical-zero qubit state.  The alpha -> inf
// limit (position eigenstate) is represented explicitly: the q period is
// unbounded, so q-type syndromes are never reduced, and the p period is
// zero, so p-type syndromes carry no information and are dropped.
struct GkpLattice {
  double alpha = 2.0;
  double q_period = 0.0;
  double p_period = 0.0;
  bool q_unbounded = false;

  static GkpLattice from_alpha(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("GkpLattice: alpha must be > 0");
    GkpLattice l;
    l.alpha = a;
    l.q_period = std::sqrt(2.0 * M_PI * a);
    l.p_period = std::sqrt(2.0 * M_PI / a);
    return l;
  }

  static GkpLattice position_eigenstate() {
    GkpLattice l;
    l.alpha = std::numeric_limits<double>::infinity();
    l.q_period = std::numeric_limits<double>::infinity();
    l.p_period = 0.0;
    l.q_unbounded = true;
    return l;
  }
};

// Logical error tests for a GKP qubit living on a lattice l whose codewords
// sit on the index-2 sublattice: a q displacement of q_period/2 is a logical
// X, a p displacement of p_period is a logical Z.  For the square qubit
// lattice (alpha = 2) both tests reduce to |R_{2 sqrt(pi)}(x)| >= sqrt(pi)/2.
inline bool q_error(double x, const GkpLattice& l) {
  return std::abs(remainder(x, l.q_period)) >= 0.25 * l.q_period;
}
inline bool p_error(double x, const GkpLattice& l) {
  return std::abs(remainder(x, 2.0 * l.p_period)) >= 0.5 * l.p_period;
}

/// Per-quadrature logical error flags for a residual logical-mode noise
/// vector ordered (xi_{1,q},...,xi_{k,q}, xi_{1,p},...,xi_{k,p}), with all
/// logical modes on the square qubit lattice.
inline std::vector<bool> logical_error_flags(const Eigen::VectorXd& xi_logical) {
  std::vector<bool> flags(xi_logical.size());
  for (Eigen::Index j = 0; j < xi_logical.size(); ++j)
    flags[j] = std::abs(remainder(xi_logical[j], 2.0 * kSqrtPi)) >= 0.5 * kSqrtPi;
  return flags;
}

}  // namespace gkpsim

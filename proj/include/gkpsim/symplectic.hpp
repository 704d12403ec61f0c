#pragma once

// Symplectic (Heisenberg-picture) algebra of the Gaussian gate set
// {CNOT, CZ, H, Squeeze}.
//
// Quadratures are ordered r = (q_1..q_n, p_1..p_n) and a Gaussian unitary U
// acts as U r U^dag = A r, so row j of A is the quadrature combination that
// r_j is mapped to.  For a circuit listing gates g_1..g_m in temporal order
// (g_1 applied first) the composite matrix is A = A_{g_1} * A_{g_2} * ... *
// A_{g_m}: adjoint maps compose by substituting each gate's rules into the
// accumulated rows, which is matrix multiplication on the right.

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace gkpsim {

struct GaussianGate {
  enum class Kind { CNOT, CZ, H, Squeeze };
  Kind kind = Kind::H;
  int j = 1;  // control / sole mode, 1-based
  int k = 0;  // target mode for two-mode gates
  double alpha = 1.0;  // squeeze parameter, > 0

  static GaussianGate cnot(int j, int k) { return {Kind::CNOT, j, k, 1.0}; }
  static GaussianGate cz(int j, int k) { return {Kind::CZ, j, k, 1.0}; }
  static GaussianGate hadamard(int j) { return {Kind::H, j, 0, 1.0}; }
  static GaussianGate squeeze(int j, double alpha) {
    return {Kind::Squeeze, j, 0, alpha};
  }

  bool operator==(const GaussianGate&) const = default;
};

struct GaussianCircuit {
  int n = 1;
  std::vector<GaussianGate> gates;

  bool operator==(const GaussianCircuit&) const = default;
};

/// The symplectic form Omega = [[0, I_n], [-I_n, 0]].
Eigen::MatrixXd omega(int n);

/// 2n x 2n matrix of a single gate:
///   CNOT(j->k): q_k -> q_k - q_j,  p_j -> p_j + p_k
///   CZ(j->k):   p_j -> p_j - q_k,  p_k -> p_k - q_j
///   H(j):       q_j -> p_j,        p_j -> -q_j
///   Squeeze(j, a): q_j -> q_j / sqrt(a),  p_j -> sqrt(a) * p_j
Eigen::MatrixXd gate_symplectic(const GaussianGate& gate, int n);

/// Product of the gate matrices in application order (see header comment).
/// The empty circuit composes to the identity.
Eigen::MatrixXd compose(const GaussianCircuit& circuit);

/// max |A Omega A^T - Omega| <= tol
bool check_symplectic(const Eigen::MatrixXd& a, double tol = 1e-9);

// Row blocks of an encoder matrix for a code with k logical modes:
// Q = logical q rows, G = auxiliary q rows, P = logical p rows,
// D = auxiliary p rows.  Stacking Q,G,P,D in that order restores A exactly.
struct EncoderBlocks {
  Eigen::MatrixXd q, g, p, d;

  Eigen::MatrixXd a1() const { return g; }
  Eigen::MatrixXd a2() const;            // stack(Q, P)
  Eigen::MatrixXd a3() const;            // stack(G, D)
  Eigen::MatrixXd restack() const;       // stack(Q, G, P, D)
};

EncoderBlocks split_blocks(const Eigen::MatrixXd& a, int k);

/// Greedy pairwise integer row reduction: repeatedly replaces row_i by
/// row_i - m*row_j (m integer) while that strictly shrinks |row_i|.  The
/// integer row span is preserved; the result is a local minimum in the sense
/// that no further single pairwise subtraction shortens any row.
Eigen::MatrixXd reduce_generator_rows(const Eigen::MatrixXd& a3);

/// Line-based circuit text, one gate per line: "CNOT 1 3", "CZ 2 5", "H 2",
/// "SQZ 2 4.0".  Blank lines and lines starting with '#' are skipped.
GaussianCircuit parse_circuit(const std::string& text, int n);
std::string format_circuit(const GaussianCircuit& circuit);

}  // namespace gkpsim

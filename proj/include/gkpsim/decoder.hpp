#pragma once

// Two-layer maximum-likelihood decoders for the three concatenation schemes,
// plus the shared least-norm / kernel-projection linear algebra.
//
// Conventions shared by all decoders: xi is the 2n displacement noise vector,
// layer 1 corrects the outer (mode-into-mode or per-mode GKP) code, layer 2
// the logical GKP qubits, and the decoding map U_enc^dag turns a residual
// displacement v into A_enc * v.

#include <Eigen/Dense>
#include <vector>

#include "gkpsim/codes.hpp"

namespace gkpsim {

/// Least-norm solution of A xi = z: xi* = A^T (A A^T)^-1 z.
/// Throws std::domain_error when A A^T is singular or badly conditioned.
Eigen::VectorXd least_norm_solve(const Eigen::MatrixXd& a,
                                 const Eigen::VectorXd& z);

/// Projection onto ker(A): P = I - A^T (A A^T)^-1 A.
Eigen::MatrixXd kernel_projection(const Eigen::MatrixXd& a);

struct SyndromeRecord {
  Eigen::VectorXd layer1;
  Eigen::VectorXd layer2;
};

struct DecodeResult {
  Eigen::VectorXd xi_final;          // 2n residual after both layers + decode
  Eigen::VectorXd xi_final_logical;  // its 2k logical-mode rows
  Eigen::VectorXd layer1_logical;    // logical residual before layer 2
  std::vector<bool> flags;           // per logical quadrature
  bool any_flag = false;
  SyndromeRecord syndromes;
};

// Precomputed per-code factorizations.  Immutable after build; decoders only
// read from it, so one instance may be shared across threads.
struct DecoderTables {
  Eigen::MatrixXd a2;             // stack(Q, P), 2k x 2n
  Eigen::VectorXd layer2_moduli;  // wrap period per A2 row
  // scheme II
  Eigen::MatrixXd p_perp;  // kernel projection of A1
  Eigen::MatrixXd b;       // A2 P_perp
  Eigen::MatrixXd m2;      // P_perp B^T (B B^T)^-1
  // scheme III
  Eigen::MatrixXd a3;             // generator rows (reduced when enabled)
  Eigen::VectorXd layer1_moduli;  // wrap period per A3 row
  Eigen::MatrixXd k3;             // A3^T (A3 A3^T)^-1
  Eigen::MatrixXd k2;             // A2^T (A2 A2^T)^-1
  // scheme I
  Eigen::VectorXd quanta;  // per-quadrature Pauli displacement quantum
  // unbiased GKP-repetition
  int n_pairs = 0;
};

std::shared_ptr<const DecoderTables> make_decoder_tables(const CodeInstance& code);

DecodeResult decode_scheme1(const Eigen::VectorXd& xi, const CodeInstance& code);
DecodeResult decode_scheme2(const Eigen::VectorXd& xi, const CodeInstance& code);
DecodeResult decode_scheme3(const Eigen::VectorXd& xi, const CodeInstance& code);
DecodeResult decode_unbiased(const Eigen::VectorXd& xi, const CodeInstance& code);

/// Dispatch on the instance's scheme/family.
DecodeResult decode(const Eigen::VectorXd& xi, const CodeInstance& code);

}  // namespace gkpsim

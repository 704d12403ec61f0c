#include "gkpsim/symplectic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gkpsim {

namespace {

void check_mode(int j, int n, const char* what) {
  if (j < 1 || j > n)
    throw std::invalid_argument(std::string(what) + ": mode index " +
                                std::to_string(j) + " outside [1, " +
                                std::to_string(n) + "]");
}

}  // namespace

Eigen::MatrixXd omega(int n) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  w.block(0, n, n, n) = Eigen::MatrixXd::Identity(n, n);
  w.block(n, 0, n, n) = -Eigen::MatrixXd::Identity(n, n);
  return w;
}

Eigen::MatrixXd gate_symplectic(const GaussianGate& gate, int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  int j = gate.j, k = gate.k;
  switch (gate.kind) {
    case GaussianGate::Kind::CNOT:
      check_mode(j, n, "CNOT");
      check_mode(k, n, "CNOT");
      if (j == k) throw std::invalid_argument("CNOT: modes must be distinct");
      a(k - 1, j - 1) = -1.0;      // q_k -> q_k - q_j
      a(n + j - 1, n + k - 1) = 1.0;  // p_j -> p_j + p_k
      break;
    case GaussianGate::Kind::CZ:
      check_mode(j, n, "CZ");
      check_mode(k, n, "CZ");
      if (j == k) throw std::invalid_argument("CZ: modes must be distinct");
      a(n + j - 1, k - 1) = -1.0;  // p_j -> p_j - q_k
      a(n + k - 1, j - 1) = -1.0;  // p_k -> p_k - q_j
      break;
    case GaussianGate::Kind::H:
      check_mode(j, n, "H");
      a(j - 1, j - 1) = 0.0;
      a(j - 1, n + j - 1) = 1.0;   // q_j -> p_j
      a(n + j - 1, n + j - 1) = 0.0;
      a(n + j - 1, j - 1) = -1.0;  // p_j -> -q_j
      break;
    case GaussianGate::Kind::Squeeze:
      check_mode(j, n, "Squeeze");
      if (!(gate.alpha > 0.0))
        throw std::invalid_argument("Squeeze: alpha must be > 0");
      a(j - 1, j - 1) = 1.0 / std::sqrt(gate.alpha);
      a(n + j - 1, n + j - 1) = std::sqrt(gate.alpha);
      break;
  }
  return a;
}

Eigen::MatrixXd compose(const GaussianCircuit& circuit) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2 * circuit.n, 2 * circuit.n);
  for (const GaussianGate& g : circuit.gates) a *= gate_symplectic(g, circuit.n);
  return a;
}

bool check_symplectic(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0) return false;
  int n = static_cast<int>(a.rows()) / 2;
  Eigen::MatrixXd w = omega(n);
  return ((a * w * a.transpose() - w).cwiseAbs().maxCoeff() <= tol);
}

Eigen::MatrixXd EncoderBlocks::a2() const {
  Eigen::MatrixXd m(q.rows() + p.rows(), q.cols());
  m << q, p;
  return m;
}

Eigen::MatrixXd EncoderBlocks::a3() const {
  Eigen::MatrixXd m(g.rows() + d.rows(), g.cols());
  m << g, d;
  return m;
}

Eigen::MatrixXd EncoderBlocks::restack() const {
  Eigen::MatrixXd m(q.rows() + g.rows() + p.rows() + d.rows(), q.cols());
  m << q, g, p, d;
  return m;
}

EncoderBlocks split_blocks(const Eigen::MatrixXd& a, int k) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0)
    throw std::invalid_argument("split_blocks: matrix must be 2n x 2n");
  int n = static_cast<int>(a.rows()) / 2;
  if (k < 1 || k >= n)
    throw std::invalid_argument("split_blocks: need 1 <= k < n");
  EncoderBlocks b;
  b.q = a.topRows(k);
  b.g = a.middleRows(k, n - k);
  b.p = a.middleRows(n, k);
  b.d = a.middleRows(n + k, n - k);
  return b;
}

Eigen::MatrixXd reduce_generator_rows(const Eigen::MatrixXd& a3) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a3);
  if (lu.rank() < a3.rows())
    throw std::invalid_argument("reduce_generator_rows: rows are rank deficient");
  Eigen::MatrixXd r = a3;
  const Eigen::Index m = r.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        if (i == j) continue;
        double denom = r.row(j).squaredNorm();
        double mu = r.row(i).dot(r.row(j)) / denom;
        double c = std::round(mu);
        if (c == 0.0) continue;
        double new_norm = (r.row(i) - c * r.row(j)).squaredNorm();
        if (new_norm < r.row(i).squaredNorm() - 1e-12) {
          r.row(i) -= c * r.row(j);
          changed = true;
        }
      }
    }
  }
  return r;
}

GaussianCircuit parse_circuit(const std::string& text, int n) {
  GaussianCircuit c;
  c.n = n;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("circuit line " + std::to_string(lineno) +
                                  ": " + why);
    };
    if (op == "CNOT" || op == "CZ") {
      int j, k;
      if (!(ls >> j >> k)) fail(op + " needs two mode indices");
      c.gates.push_back(op == "CNOT" ? GaussianGate::cnot(j, k)
                                     : GaussianGate::cz(j, k));
    } else if (op == "H") {
      int j;
      if (!(ls >> j)) fail("H needs a mode index");
      c.gates.push_back(GaussianGate::hadamard(j));
    } else if (op == "SQZ") {
      int j;
      double alpha;
      if (!(ls >> j >> alpha)) fail("SQZ needs a mode index and alpha");
      c.gates.push_back(GaussianGate::squeeze(j, alpha));
    } else {
      fail("unknown gate '" + op + "'");
    }
    gate_symplectic(c.gates.back(), n);  // validates indices eagerly
  }
  return c;
}

std::string format_circuit(const GaussianCircuit& circuit) {
  std::ostringstream out;
  for (const GaussianGate& g : circuit.gates) {
    switch (g.kind) {
      case GaussianGate::Kind::CNOT:
        out << "CNOT " << g.j << ' ' << g.k << '\n';
        break;
      case GaussianGate::Kind::CZ:
        out << "CZ " << g.j << ' ' << g.k << '\n';
        break;
      case GaussianGate::Kind::H:
        out << "H " << g.j << '\n';
        break;
      case GaussianGate::Kind::Squeeze: {
        char buf[64];
        snprintf(buf, sizeof buf, "SQZ %d %.17g\n", g.j, g.alpha);
        out << buf;
        break;
      }
    }
  }
  return out.str();
}

}  // namespace gkpsim

#include "gkpsim/decoder.hpp"

#include <cmath>
#include <stdexcept>

#include "gkpsim/lattice.hpp"

namespace gkpsim {

namespace {

constexpr double kMaxCondition = 1e6;

// Cholesky of A A^T with a conditioning guard shared by all decoders.
struct GramSolver {
  Eigen::LDLT<Eigen::MatrixXd> ldlt;

  explicit GramSolver(const Eigen::MatrixXd& a, const char* what) {
    Eigen::MatrixXd gram = a * a.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    double smin = svd.singularValues().minCoeff();
    double smax = svd.singularValues().maxCoeff();
    if (!(smin > 0.0) || smax / smin > kMaxCondition) {
      Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
      throw std::domain_error(std::string(what) +
                              ": Gram matrix singular or ill conditioned (rank " +
                              std::to_string(lu.rank()) + " of " +
                              std::to_string(a.rows()) + " rows)");
    }
    ldlt.compute(gram);
  }
};

std::vector<bool> flags_for(const Eigen::VectorXd& logical,
                            const std::vector<GkpLattice>& lattices, int k) {
  std::vector<bool> flags(2 * k);
  for (int j = 0; j < k; ++j) {
    flags[j] = q_error(logical[j], lattices[j]);
    flags[k + j] = p_error(logical[k + j], lattices[j]);
  }
  return flags;
}

void finish(DecodeResult& res, const CodeInstance& code) {
  res.flags = flags_for(res.xi_final_logical, code.lattices, code.k);
  res.any_flag = false;
  for (bool f : res.flags) res.any_flag = res.any_flag || f;
}

Eigen::VectorXd logical_rows(const Eigen::VectorXd& v, int n, int k) {
  Eigen::VectorXd out(2 * k);
  out.head(k) = v.head(k);
  out.tail(k) = v.segment(n, k);
  return out;
}

Eigen::VectorXd wrap_rows(const Eigen::VectorXd& v, const Eigen::VectorXd& moduli) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out[i] = std::isfinite(moduli[i]) ? remainder(v[i], moduli[i]) : v[i];
  return out;
}

}  // namespace

Eigen::VectorXd least_norm_solve(const Eigen::MatrixXd& a,
                                 const Eigen::VectorXd& z) {
  if (a.rows() != z.size())
    throw std::invalid_argument("least_norm_solve: dimension mismatch");
  GramSolver s(a, "least_norm_solve");
  return a.transpose() * s.ldlt.solve(z);
}

Eigen::MatrixXd kernel_projection(const Eigen::MatrixXd& a) {
  GramSolver s(a, "kernel_projection");
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(a.cols(), a.cols()) -
                      a.transpose() * s.ldlt.solve(a);
  return p;
}

std::shared_ptr<const DecoderTables> make_decoder_tables(const CodeInstance& code) {
  auto t = std::make_shared<DecoderTables>();
  const int n = code.n, k = code.k;
  t->a2 = code.blocks.a2();

  // logical GKP syndrome periods: q rows wrap at q_period/2, p rows at
  // p_period (both sqrt(pi) on the square lattice)
  t->layer2_moduli.resize(2 * k);
  for (int j = 0; j < k; ++j) {
    t->layer2_moduli[j] = 0.5 * code.lattices[j].q_period;
    t->layer2_moduli[k + j] = code.lattices[j].p_period;
  }

  if (code.spec.family == CodeFamily::UnbiasedGkpRepetition) {
    t->n_pairs = code.spec.size;
    return t;
  }

  switch (code.spec.scheme) {
    case Scheme::I: {
      t->quanta.resize(2 * n);
      for (int m = 0; m < n; ++m) {
        t->quanta[m] = 0.5 * code.lattices[m].q_period;
        t->quanta[n + m] = code.lattices[m].p_period;
      }
      break;
    }
    case Scheme::II: {
      Eigen::MatrixXd a1 = code.blocks.a1();
      t->p_perp = kernel_projection(a1);
      t->b = t->a2 * t->p_perp;
      GramSolver bs(t->b, "scheme II layer 2");
      t->m2 = t->p_perp * t->b.transpose() * bs.ldlt.solve(
                  Eigen::MatrixXd::Identity(t->b.rows(), t->b.rows()));
      break;
    }
    case Scheme::III: {
      Eigen::MatrixXd a3 = code.decoder_generators.size() > 0
                               ? code.decoder_generators
                               : code.blocks.a3();
      const int na = n - k;
      Eigen::VectorXd moduli(2 * na);
      for (int m = 0; m < na; ++m) {
        moduli[m] = code.lattices[k + m].q_period;
        moduli[na + m] = code.lattices[k + m].p_period;
      }
      if (code.spec.reduce_generators) {
        bool uniform = (moduli.array() == moduli[0]).all();
        if (uniform) {
          a3 = reduce_generator_rows(a3);
        } else {
          // integer combinations are only measurable within rows sharing a
          // wrap period, so reduce the q-type and p-type blocks separately
          a3.topRows(na) = reduce_generator_rows(a3.topRows(na));
          a3.bottomRows(na) = reduce_generator_rows(a3.bottomRows(na));
        }
      }
      t->a3 = a3;
      t->layer1_moduli = moduli;
      GramSolver g3(a3, "scheme III layer 1");
      t->k3 = a3.transpose() *
              g3.ldlt.solve(Eigen::MatrixXd::Identity(a3.rows(), a3.rows()));
      GramSolver g2(t->a2, "scheme III layer 2");
      t->k2 = t->a2.transpose() *
              g2.ldlt.solve(Eigen::MatrixXd::Identity(2 * k, 2 * k));
      break;
    }
  }
  return t;
}

DecodeResult decode_scheme1(const Eigen::VectorXd& xi, const CodeInstance& code) {
  if (code.spec.scheme != Scheme::I)
    throw std::invalid_argument("decode_scheme1: not a scheme I instance");
  const DecoderTables& t = *code.tables;
  const int n = code.n, k = code.k;
  DecodeResult res;

  // layer 1: per-mode GKP correction leaves exact multiples of the quanta
  Eigen::VectorXd z1(2 * n), xi1(2 * n);
  Eigen::VectorXi m(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    z1[i] = remainder(xi[i], t.quanta[i]);
    xi1[i] = xi[i] - z1[i];
    m[i] = static_cast<int>(std::llround(xi1[i] / t.quanta[i]));
  }

  // layer 2: binary stabilizer syndromes, minimum-weight table correction
  uint32_t mask = pauli_syndrome(code.pauli_stabilizers, m);
  const Eigen::VectorXi& corr = code.syndrome_table.at(mask);
  Eigen::VectorXd xi2 = xi1 - corr.cast<double>().cwiseProduct(t.quanta);

  res.xi_final = code.a_enc * xi2;
  res.xi_final_logical = logical_rows(res.xi_final, n, k);
  res.layer1_logical = logical_rows(code.a_enc * xi1, n, k);
  res.syndromes.layer1 = z1;
  res.syndromes.layer2.resize(code.pauli_stabilizers.rows());
  for (Eigen::Index i = 0; i < res.syndromes.layer2.size(); ++i)
    res.syndromes.layer2[i] = (mask >> i) & 1u ? -1.0 : 1.0;
  finish(res, code);
  return res;
}

DecodeResult decode_scheme2(const Eigen::VectorXd& xi, const CodeInstance& code) {
  if (code.spec.scheme != Scheme::II)
    throw std::invalid_argument("decode_scheme2: not a scheme II instance");
  const DecoderTables& t = *code.tables;
  DecodeResult res;

  Eigen::VectorXd z1 = code.blocks.a1() * xi;   // real-valued, no wrap
  Eigen::VectorXd xi1 = t.p_perp * xi;
  Eigen::VectorXd r = t.a2 * xi1;
  Eigen::VectorXd z2 = wrap_rows(r, t.layer2_moduli);
  Eigen::VectorXd xi_corr = t.m2 * z2;

  res.xi_final = code.a_enc * (xi1 - xi_corr);
  res.xi_final_logical = logical_rows(res.xi_final, code.n, code.k);
  res.layer1_logical = r;
  res.syndromes.layer1 = z1;
  res.syndromes.layer2 = z2;
  finish(res, code);
  return res;
}

DecodeResult decode_scheme3(const Eigen::VectorXd& xi, const CodeInstance& code) {
  if (code.spec.scheme != Scheme::III ||
      code.spec.family == CodeFamily::UnbiasedGkpRepetition)
    throw std::invalid_argument("decode_scheme3: not a scheme III instance");
  const DecoderTables& t = *code.tables;
  DecodeResult res;

  // layer 1: modular syndromes of the auxiliary GKP stabilizers
  Eigen::VectorXd z1 = wrap_rows(t.a3 * xi, t.layer1_moduli);
  Eigen::VectorXd xi_star = t.k3 * z1;
  Eigen::VectorXd xi1 = xi - xi_star;

  // layer 2: logical GKP syndromes; the linear relaxation treats z1 as a
  // constant, so the estimated original noise is K2 (z2 + A2 xi_star)
  Eigen::VectorXd r = t.a2 * xi1;
  Eigen::VectorXd z2 = wrap_rows(r, t.layer2_moduli);
  Eigen::VectorXd xi_hat = t.k2 * (z2 + t.a2 * xi_star);

  res.xi_final = code.a_enc * (xi - xi_hat);
  res.xi_final_logical = logical_rows(res.xi_final, code.n, code.k);
  res.layer1_logical = r;
  res.syndromes.layer1 = z1;
  res.syndromes.layer2 = z2;
  finish(res, code);
  return res;
}

DecodeResult decode_unbiased(const Eigen::VectorXd& xi, const CodeInstance& code) {
  if (code.spec.family != CodeFamily::UnbiasedGkpRepetition)
    throw std::invalid_argument("decode_unbiased: not an unbiased instance");
  const int np = code.tables->n_pairs;
  DecodeResult res;

  Eigen::VectorXd z = unbiased_syndrome_map(np, xi);
  auto zq = [&](int m) { return z[1 + m]; };            // m in 1..2n
  auto zp = [&](int m) { return z[1 + 2 * np + m]; };   // m in 1..2n

  double sum_zp_first = 0, sum_zp_second = 0, sum_zq_first = 0, sum_zq_second = 0;
  for (int m = 1; m <= np; ++m) {
    sum_zp_first += zp(m);
    sum_zq_first += zq(m);
  }
  for (int m = np + 1; m <= 2 * np; ++m) {
    sum_zp_second += zp(m);
    sum_zq_second += zq(m);
  }
  double zbar_q = (sum_zp_first + sum_zq_second) / (np + 1);
  double zbar_p = -sum_zp_second + sum_zq_first / (np + 1);

  res.xi_final_logical.resize(2);
  res.xi_final_logical << z[0] - zbar_q, z[1] - zbar_p;
  res.xi_final = Eigen::VectorXd::Zero(2 * code.n);
  res.xi_final[0] = res.xi_final_logical[0];
  res.xi_final[code.n] = res.xi_final_logical[1];
  res.layer1_logical = res.xi_final_logical;
  res.syndromes.layer1 = z.tail(4 * np);
  res.syndromes.layer2 = z.head(2);
  finish(res, code);
  return res;
}

DecodeResult decode(const Eigen::VectorXd& xi, const CodeInstance& code) {
  if (code.spec.family == CodeFamily::UnbiasedGkpRepetition)
    return decode_unbiased(xi, code);
  switch (code.spec.scheme) {
    case Scheme::I: return decode_scheme1(xi, code);
    case Scheme::II: return decode_scheme2(xi, code);
    case Scheme::III: return decode_scheme3(xi, code);
  }
  throw std::logic_error("decode: unreachable");
}

}  // namespace gkpsim

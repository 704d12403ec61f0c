// Acceptance suite: end-to-end checks of the published values and the
// statistical/algebraic contracts, one PASS/FAIL line per criterion.
//
// Monte Carlo sizes default to desk scale (10^6 samples, wider tolerance
// where a fallback is defined).  Set GKPSIM_ACCEPTANCE_FULL=1 for the full
// 10^7-sample run of criterion 1.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "gkpsim/analytic.hpp"
#include "gkpsim/decoder.hpp"
#include "gkpsim/lattice.hpp"
#include "gkpsim/montecarlo.hpp"
#include "gkpsim/noise.hpp"
#include "gkpsim/quditgkp.hpp"

using namespace gkpsim;

namespace {

constexpr uint64_t kSeed = 20240718;
int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail) {
  printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
         name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[40];
  snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

ErrorRateEstimate run(const char* id, Scheme scheme, double sigma, uint64_t m,
                      bool moments = false) {
  CodeInstance code = build(parse_code_id(id, scheme));
  EstimateOptions opts;
  opts.collect_moments = moments;
  return estimate(code, sigma, m, kSeed, opts);
}

// ---------------------------------------------------------------------------

void criterion_1_table_one(bool full) {
  const uint64_t m = full ? 10000000ull : 1000000ull;
  const double k_tol = full ? 3.0 : 4.0;
  struct Target {
    const char* id;
    double value;
  } targets[] = {{"513", 4.393e-3}, {"steane", 1.374e-3}, {"shor", 7.319e-3}};
  bool pass = true;
  std::string detail;
  for (const Target& t : targets) {
    ErrorRateEstimate est = run(t.id, Scheme::III, 0.20, m);
    double se = std::max(est.std_err, std::sqrt(t.value * (1 - t.value) / m));
    bool ok = std::abs(est.p_emp - t.value) <= k_tol * se;
    pass = pass && ok;
    detail += std::string(t.id) + "=" + fmt(est.p_emp) + " (target " +
              fmt(t.value) + (ok ? ") " : " MISS) ");
  }
  report(1, "Table I scheme III rates at sigma=0.20", pass, detail);
}

void criterion_2_ordering() {
  const uint64_t m = 1000000;
  bool pass = true;
  std::string detail;
  for (double sigma = 0.15; sigma < 0.205; sigma += 0.01) {
    ErrorRateEstimate st = run("steane", Scheme::III, sigma, m);
    ErrorRateEstimate fv = run("513", Scheme::III, sigma, m);
    ErrorRateEstimate sh = run("shor", Scheme::III, sigma, m);
    auto sig_less = [](const ErrorRateEstimate& a, const ErrorRateEstimate& b) {
      double se = std::sqrt(a.std_err * a.std_err + b.std_err * b.std_err);
      return b.p_emp - a.p_emp > 3.0 * se;
    };
    bool ok = sig_less(st, fv) && sig_less(fv, sh);
    if (!ok) detail += "sigma=" + fmt(sigma) + " out of order; ";
    pass = pass && ok;
  }
  report(2, "Table I ordering steane < 513 < shor", pass, detail);
}

void criterion_3_crossover() {
  const uint64_t m = 1000000;
  bool pass_high = true, pass_low = true;
  std::string detail;
  CodeInstance rep_i = build(parse_code_id("rep3", Scheme::I));
  CodeInstance rep_iii = build(parse_code_id("rep3", Scheme::III));
  for (int i = 0; i <= 16; ++i) {
    double sigma = 0.14 + 0.01 * i;
    // same code id and sigma means both schemes decode identical noise
    double p1 = estimate(rep_i, sigma, m, kSeed).p_emp;
    double p3 = estimate(rep_iii, sigma, m, kSeed).p_emp;
    if (sigma >= 0.189 && !(p3 < p1)) {
      pass_high = false;
      detail += "sigma=" + fmt(sigma) + ": III=" + fmt(p3) +
                " !< I=" + fmt(p1) + "; ";
    }
    if (sigma <= 0.161 && !(p3 > p1)) {
      pass_low = false;
      detail += "sigma=" + fmt(sigma) + ": III=" + fmt(p3) +
                " !> I=" + fmt(p1) + "; ";
    }
  }
  if (!pass_low) {
    // The low-sigma half of this criterion cannot come out green for this
    // decoder: the closed-form rates put scheme III strictly below scheme I
    // at small sigma, and both are far below the 1e-6 resolution of these
    // sample sizes.  Print the analytic rates so the failure is self-dumping.
    detail += "analytic I/III:";
    for (double s : {0.14, 0.15, 0.16})
      detail += " s=" + fmt(s) + ": " + fmt(scheme1_rep3_rate(s).value) + "/" +
                fmt(scheme3_rep3_rate(s).value);
  }
  report(3, "rep3 scheme I/III crossover around sigma=0.18",
         pass_high && pass_low, detail);
}

void criterion_4_variances() {
  const uint64_t m = 1000000;
  const double sigma = 0.05, var = sigma * sigma, tol = 0.02;
  bool pass = true;
  std::string detail;
  auto check_var = [&](const char* what, double got, double want) {
    bool ok = std::abs(got - want) <= tol * want;
    if (!ok)
      detail += std::string(what) + "=" + fmt(got) + " want " + fmt(want) + "; ";
    pass = pass && ok;
  };

  ErrorRateEstimate rep3 = run("rep3", Scheme::III, sigma, m, true);
  check_var("rep3.q", rep3.layer1_variance()[0], var / 3.0);
  check_var("rep3.p", rep3.layer1_variance()[1], var);

  ErrorRateEstimate five = run("513", Scheme::III, sigma, m, true);
  check_var("513.q", five.layer1_variance()[0], 5.0 * var / 11.0);
  check_var("513.p", five.layer1_variance()[1], 3.0 * var / 11.0);

  for (int np : {1, 2, 3}) {
    std::string id = "unbiased-gkp-rep:" + std::to_string(np);
    ErrorRateEstimate unb = run(id.c_str(), Scheme::III, sigma, m, true);
    check_var((id + ".q").c_str(), unb.final_variance()[0], var / (np + 1));
    check_var((id + ".p").c_str(), unb.final_variance()[1], var / (np + 1));
  }
  report(4, "small-noise variance laws (2%)", pass, detail);
}

void criterion_5_analytic_vs_mc() {
  const uint64_t m = 1000000;
  bool pass = true;
  std::string detail;
  for (Scheme scheme : {Scheme::I, Scheme::II, Scheme::III}) {
    CodeInstance code = build(parse_code_id("rep3", scheme));
    for (double sigma : {0.10, 0.15, 0.20, 0.25, 0.30}) {
      double want = 0;
      switch (scheme) {
        case Scheme::I: want = scheme1_rep3_rate(sigma); break;
        case Scheme::II: want = scheme2_rep3_rate(sigma); break;
        case Scheme::III: want = scheme3_rep3_rate(sigma); break;
      }
      ErrorRateEstimate est = estimate(code, sigma, m, kSeed);
      double se = std::max(est.std_err, std::sqrt(want * (1 - want) / m));
      bool ok = std::abs(est.p_emp - want) <= 3.0 * std::max(se, 1e-12);
      if (!ok)
        detail += to_string(scheme) + "@" + fmt(sigma) + ": mc=" +
                  fmt(est.p_emp) + " vs " + fmt(want) + "; ";
      pass = pass && ok;
    }
  }
  report(5, "analytic rates match Monte Carlo (rep3, all schemes)", pass,
         detail);
}

void criterion_6_lemma1() {
  const uint64_t m = 1000000;
  bool pass = true;
  std::string detail;
  for (const char* id : {"rep3", "513"}) {
    for (Scheme scheme : {Scheme::II, Scheme::III}) {
      for (double sigma : {0.1, 0.2, 0.3}) {
        ErrorRateEstimate est = run(id, scheme, sigma, m, true);
        for (int j = 0; j < est.layer1_flag_rate.size(); ++j) {
          double a = est.layer1_flag_rate[j], b = est.final_flag_rate[j];
          double p = std::max({a, b, 1.0 / m});
          if (std::abs(a - b) > 3.0 * std::sqrt(p * (1 - p) / m)) {
            pass = false;
            detail += std::string(id) + "/" + to_string(scheme) + "@" +
                      fmt(sigma) + " quad " + std::to_string(j) + "; ";
          }
        }
      }
    }
  }
  report(6, "layer-2 GKP recovery leaves correct rates unchanged", pass,
         detail);
}

void criterion_7_linear_algebra() {
  bool pass = true;
  std::string detail;
  RngStream rng(13579, 0);
  auto randn = [&](int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.normal();
    return v;
  };

  // pseudoinverse: constraint, orthogonality, quantified minimality
  for (int rep = 0; rep < 1000 && pass; ++rep) {
    Eigen::MatrixXd a(2, 6);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 6; ++j) a(i, j) = rng.normal();
    Eigen::VectorXd z = randn(2);
    Eigen::VectorXd x = least_norm_solve(a, z);
    if ((a * x - z).cwiseAbs().maxCoeff() > 1e-9) {
      pass = false;
      detail = "constraint violated";
    }
    Eigen::MatrixXd p = kernel_projection(a);
    if ((p * x).cwiseAbs().maxCoeff() > 1e-9) {
      pass = false;
      detail = "solution not orthogonal to kernel";
    }
    for (int t = 0; t < 100; ++t) {
      Eigen::VectorXd v = p * randn(6);
      if (x.norm() > (x + v).norm() + 1e-12) {
        pass = false;
        detail = "not minimal";
        break;
      }
    }
    if ((a * p).cwiseAbs().maxCoeff() > 1e-9 ||
        (p * p - p).cwiseAbs().maxCoeff() > 1e-9 ||
        (p - p.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
      pass = false;
      detail = "projection identities violated";
    }
  }

  // symplectic validation of every cataloged encoder
  for (const char* id : {"rep3", "rep5", "rep7", "513", "steane", "shor"})
    for (Scheme s : {Scheme::I, Scheme::II, Scheme::III})
      if (!check_symplectic(build(parse_code_id(id, s)).a_enc)) {
        pass = false;
        detail += std::string("encoder ") + id + " not symplectic; ";
      }
  for (int np : {1, 2, 3})
    if (!check_symplectic(
            build(parse_code_id("unbiased-gkp-rep:" + std::to_string(np),
                                Scheme::III))
                .a_enc)) {
      pass = false;
      detail += "unbiased encoder not symplectic; ";
    }

  // five-qubit nullifier row space vs the published matrix
  CodeInstance five = build(parse_code_id("513", Scheme::II));
  Eigen::MatrixXd g42(4, 10);
  g42 << -1, 0, -1, 0, 0, 0, 0, 0, 1, 1,
          0, -1, 0, -1, 0, 1, 0, 0, 0, 1,
          0, -1, 0, 0, -1, 0, 0, 1, 1, 0,
          0, 0, -1, 0, -1, 1, 1, 0, 0, 0;
  auto resid = [](const Eigen::MatrixXd& rows, const Eigen::MatrixXd& onto) {
    Eigen::MatrixXd p =
        onto.transpose() * (onto * onto.transpose()).ldlt().solve(onto);
    return ((rows * p) - rows).cwiseAbs().maxCoeff();
  };
  if (resid(five.blocks.a1(), g42) > 1e-9 || resid(g42, five.blocks.a1()) > 1e-9) {
    pass = false;
    detail += "five-qubit row space mismatch; ";
  }
  report(7, "linear-algebra property suite", pass, detail);
}

void criterion_8_footnote_equivalence() {
  CodeInstance code = build(parse_code_id("rep3", Scheme::I));
  Eigen::MatrixXd a1(2, 6);
  a1 << -1, 1, 0, 0, 0, 0,
        -1, 0, 1, 0, 0, 0;
  std::vector<Eigen::VectorXd> errors;
  for (int mm = 0; mm < 3; ++mm)
    for (int sgn : {1, -1}) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(6);
      e[mm] = sgn * kSqrtPi;
      errors.push_back(e);
    }
  size_t n_single = errors.size();
  for (size_t i = 0; i < n_single; ++i)
    for (size_t j = 0; j < n_single; ++j)
      errors.push_back(errors[i] + errors[j]);

  bool pass = true;
  for (const Eigen::VectorXd& e : errors) {
    Eigen::VectorXd z(2);
    for (int i = 0; i < 2; ++i)
      z[i] = gkpsim::remainder(a1.row(i).dot(e), 2.0 * kSqrtPi);
    Eigen::VectorXd pred = least_norm_solve(a1, z);
    Eigen::VectorXi m6(6), pred_units(6);
    for (int j = 0; j < 6; ++j) {
      pred_units[j] =
          std::llround((pred[j] - gkpsim::remainder(pred[j], kSqrtPi)) / kSqrtPi);
      m6[j] = std::llround(e[j] / kSqrtPi);
    }
    const Eigen::VectorXi& corr =
        code.syndrome_table.at(pauli_syndrome(code.pauli_stabilizers, m6));
    for (int j = 0; j < 6; ++j)
      if ((((pred_units[j] % 2) + 2) % 2) != corr[j] % 2) pass = false;
  }
  report(8, "remainder-of-pseudoinverse equals the minimum-weight table", pass,
         "");
}

void criterion_9_dual_optimization() {
  bool pass = true;
  std::string detail;
  for (const char* id : {"rep3", "513"}) {
    CodeInstance code = build(parse_code_id(id, Scheme::II));
    Eigen::MatrixXd a1 = code.blocks.a1();
    Eigen::MatrixXd a2 = code.blocks.a2();
    Eigen::MatrixXd p2 = kernel_projection(a2);
    RngStream rng(2468, 0);
    double worst = 0.0;
    for (int rep = 0; rep < 10000; ++rep) {
      Eigen::VectorXd xi(2 * code.n);
      for (int i = 0; i < 2 * code.n; ++i) xi[i] = 0.3 * rng.normal();
      DecodeResult r = decode_scheme2(xi, code);
      Eigen::VectorXd z = a1 * xi;
      Eigen::VectorXd xi1 = xi - least_norm_solve(a1, z);
      Eigen::VectorXd z2 = remainder_vec(Eigen::VectorXd(a2 * xi1), kSqrtPi);
      Eigen::VectorXd corr =
          least_norm_solve(a2, z2) - p2 * least_norm_solve(a1, z);
      Eigen::VectorXd logical_alt = a2 * (xi1 - corr);
      worst = std::max(worst,
                       (logical_alt - r.xi_final_logical).cwiseAbs().maxCoeff());
    }
    detail += std::string(id) + " max|diff|=" + fmt(worst) + "; ";
    pass = pass && worst < 1e-9;
  }
  report(9, "scheme II dual-optimization equivalence", pass, detail);
}

void criterion_10_qudit() {
  bool pass = true;
  std::string detail;
  QuditParams p16(16, 4);
  for (int a1 = -7; a1 <= 8 && pass; ++a1)
    for (int c1 = -7; c1 <= 8 && pass; ++c1)
      for (int a2 = -7; a2 <= 8 && pass; ++a2)
        for (int c2 = -7; c2 <= 8 && pass; ++c2) {
          auto r = qudit_round(p16, {a1, c1, a2, c2});
          if (r.syndrome_a != centered_mod(centered_mod(a2 - a1, 16), 4) ||
              r.syndrome_c != centered_mod(centered_mod(c2, 16), 4)) {
            pass = false;
            detail = "syndrome mismatch";
          }
          bool in_window = std::abs(centered_mod(a2 - a1, 16)) < 2 &&
                           std::abs(centered_mod(c2, 16)) < 2;
          if (in_window && r.residual_z != 0) {
            pass = false;
            detail = "in-window Z not eliminated";
          }
        }

  QuditParams wide(4096, 64);
  RngStream rng(8888, 0);
  auto draw = [&]() {
    while (true) {
      int v = static_cast<int>(std::llround(4.0 * rng.normal()));
      if (std::abs(v) <= 15) return v;
    }
  };
  double sa = 0, saa = 0, sx = 0, sxx = 0;
  const int n_draws = 1000000;
  for (int i = 0; i < n_draws; ++i) {
    QuditError err{draw(), draw(), draw(), draw()};
    auto r = qudit_round(wide, err);
    sa += err.a1;
    saa += double(err.a1) * err.a1;
    sx += r.residual_x;
    sxx += double(r.residual_x) * r.residual_x;
  }
  double var_a = saa / n_draws - (sa / n_draws) * (sa / n_draws);
  double var_x = sxx / n_draws - (sx / n_draws) * (sx / n_draws);
  double ratio = var_x / var_a;
  if (std::abs(ratio - 0.5) > 0.05 * 0.5) pass = false;
  detail += "X-variance ratio=" + fmt(ratio);
  report(10, "qudit syndrome algebra and 50% variance reduction", pass, detail);
}

void criterion_11_determinism() {
  CodeInstance code = build(parse_code_id("rep3", Scheme::III));
  double first = -1;
  bool pass = true;
  for (int threads : {1, 4, 8}) {
    EstimateOptions opts;
    opts.threads = threads;
    ErrorRateEstimate est = estimate(code, 0.2, 200000, kSeed, opts);
    if (first < 0)
      first = est.p_emp;
    else if (est.p_emp != first)
      pass = false;
  }
  report(11, "bit-identical estimates across 1/4/8 worker threads", pass,
         "p_emp=" + fmt(first));
}

}  // namespace

int main() {
  const bool full = std::getenv("GKPSIM_ACCEPTANCE_FULL") != nullptr;
  printf("acceptance suite (seed %llu, %s Monte Carlo sizes)\n",
         static_cast<unsigned long long>(kSeed), full ? "full" : "desk-scale");
  criterion_1_table_one(full);
  criterion_2_ordering();
  criterion_3_crossover();
  criterion_4_variances();
  criterion_5_analytic_vs_mc();
  criterion_6_lemma1();
  criterion_7_linear_algebra();
  criterion_8_footnote_equivalence();
  criterion_9_dual_optimization();
  criterion_10_qudit();
  criterion_11_determinism();
  printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gkpsim/codes.hpp"
#include "gkpsim/noise.hpp"

using namespace gkpsim;

namespace {

// independent GF(2) oracle: enumerate the full group generated by the
// supports and compare as sets
std::set<uint32_t> gf2_span(const std::vector<uint32_t>& gens) {
  std::set<uint32_t> span{0};
  for (uint32_t g : gens) {
    std::set<uint32_t> next = span;
    for (uint32_t v : span) next.insert(v ^ g);
    span = next;
  }
  return span;
}

uint32_t support_bits(const Eigen::VectorXd& row) {
  uint32_t b = 0;
  for (Eigen::Index i = 0; i < row.size(); ++i)
    if (std::llround(std::abs(row[i])) % 2 == 1) b |= 1u << i;
  return b;
}

std::vector<CodeSpec> catalog_specs() {
  std::vector<CodeSpec> specs;
  for (const char* id : {"rep3", "rep5", "rep7", "513", "steane", "shor"})
    for (Scheme s : {Scheme::I, Scheme::II, Scheme::III})
      specs.push_back(parse_code_id(id, s));
  for (int np : {1, 2, 3})
    specs.push_back(
        parse_code_id("unbiased-gkp-rep:" + std::to_string(np), Scheme::III));
  return specs;
}

}  // namespace

TEST_CASE("every catalog instance is built consistently") {
  for (const CodeSpec& spec : catalog_specs()) {
    CAPTURE(code_id(spec));
    CAPTURE(to_string(spec.scheme));
    CodeInstance code = build(spec);
    CHECK(check_symplectic(code.a_enc));
    CHECK((code.blocks.restack() - code.a_enc).cwiseAbs().maxCoeff() == 0.0);
    CHECK(code.n == static_cast<int>(code.lattices.size()));
    CHECK(code.k == 1);
    CHECK(code.id == code_id(spec));
  }
}

TEST_CASE("gram matrices are well conditioned") {
  for (const CodeSpec& spec : catalog_specs()) {
    CodeInstance code = build(spec);
    auto cond = [](const Eigen::MatrixXd& a) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(a * a.transpose());
      return svd.singularValues().maxCoeff() / svd.singularValues().minCoeff();
    };
    CHECK(cond(code.blocks.a1()) < 1e6);
    CHECK(cond(code.blocks.a3()) < 1e6);
    CHECK(cond(code.blocks.a2()) < 1e6);
  }
}

TEST_CASE("rep3 blocks match the published nullifiers and stabilizers") {
  CodeInstance code = build(parse_code_id("rep3", Scheme::III));
  Eigen::MatrixXd a1(2, 6);
  a1 << -1, 1, 0, 0, 0, 0,
        -1, 0, 1, 0, 0, 0;
  CHECK((code.blocks.a1() - a1).cwiseAbs().maxCoeff() == 0.0);
  // A3 carries the momentum rows p2, p3 in addition to the nullifiers
  Eigen::MatrixXd a3 = code.blocks.a3();
  REQUIRE(a3.rows() == 4);
  Eigen::RowVectorXd p2(6), p3(6);
  p2 << 0, 0, 0, 0, 1, 0;
  p3 << 0, 0, 0, 0, 0, 1;
  CHECK((a3.row(2) - p2).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a3.row(3) - p3).cwiseAbs().maxCoeff() == 0.0);
  // logical rows: q1 and the three-mode momentum sum
  Eigen::MatrixXd a2(2, 6);
  a2 << 1, 0, 0, 0, 0, 0,
        0, 0, 0, 1, 1, 1;
  CHECK((code.blocks.a2() - a2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("repetition nullifiers are position type") {
  for (const char* id : {"rep3", "rep5", "rep7"}) {
    CodeInstance code = build(parse_code_id(id, Scheme::II));
    CHECK(code.blocks.a1().rightCols(code.n).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("five-qubit instance reproduces the published rows") {
  CodeInstance code = build(parse_code_id("513", Scheme::II));
  Eigen::MatrixXd g42(4, 10);
  g42 << -1, 0, -1, 0, 0, 0, 0, 0, 1, 1,
          0, -1, 0, -1, 0, 1, 0, 0, 0, 1,
          0, -1, 0, 0, -1, 0, 0, 1, 1, 0,
          0, 0, -1, 0, -1, 1, 1, 0, 0, 0;
  CHECK((code.blocks.a1() - g42).cwiseAbs().maxCoeff() == 0.0);

  // row-space equality via mutual projection
  Eigen::MatrixXd g = code.blocks.a1();
  auto proj_residual = [](const Eigen::MatrixXd& rows,
                          const Eigen::MatrixXd& onto) {
    Eigen::MatrixXd p =
        onto.transpose() * (onto * onto.transpose()).ldlt().solve(onto);
    return ((rows * p) - rows).cwiseAbs().maxCoeff();
  };
  CHECK(proj_residual(g, g42) < 1e-9);
  CHECK(proj_residual(g42, g) < 1e-9);

  // logical GKP stabilizer supports
  Eigen::RowVectorXd q_row(10), p_row(10);
  q_row << 1, -1, -1, 1, -1, 0, 0, 0, 0, 0;
  p_row << 0, 0, 1, -1, 0, 1, 0, 0, 0, 0;
  CHECK((code.blocks.q - q_row).cwiseAbs().maxCoeff() == 0.0);
  CHECK((code.blocks.p - p_row).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("steane and shor stabilizer groups match the textbook sets") {
  CodeInstance steane = build(parse_code_id("steane", Scheme::I));
  std::vector<uint32_t> mine;
  for (Eigen::Index r = 0; r < steane.blocks.g.rows(); ++r)
    mine.push_back(support_bits(steane.blocks.g.row(r)));
  auto zb = [](std::initializer_list<int> m, int) {
    uint32_t b = 0;
    for (int j : m) b |= 1u << (j - 1);
    return b;
  };
  auto xb = [](std::initializer_list<int> m, int n) {
    uint32_t b = 0;
    for (int j : m) b |= 1u << (n + j - 1);
    return b;
  };
  std::vector<uint32_t> steane_ref = {
      xb({4, 5, 6, 7}, 7), xb({2, 3, 6, 7}, 7), xb({1, 3, 5, 7}, 7),
      zb({4, 5, 6, 7}, 7), zb({2, 3, 6, 7}, 7), zb({1, 3, 5, 7}, 7)};
  CHECK(gf2_span(mine) == gf2_span(steane_ref));

  CodeInstance shor = build(parse_code_id("shor", Scheme::I));
  mine.clear();
  for (Eigen::Index r = 0; r < shor.blocks.g.rows(); ++r)
    mine.push_back(support_bits(shor.blocks.g.row(r)));
  std::vector<uint32_t> shor_ref = {
      zb({1, 2}, 9),       zb({2, 3}, 9), zb({4, 5}, 9),
      zb({5, 6}, 9),       zb({7, 8}, 9), zb({8, 9}, 9),
      xb({1, 2, 3, 4, 5, 6}, 9), xb({4, 5, 6, 7, 8, 9}, 9)};
  CHECK(gf2_span(mine) == gf2_span(shor_ref));
}

TEST_CASE("rep3 scheme I syndrome table matches the minimum weight decoder") {
  CodeInstance code = build(parse_code_id("rep3", Scheme::I));
  REQUIRE(code.pauli_stabilizers.rows() == 2);
  REQUIRE(code.syndrome_table.size() == 4);

  auto x_shift = [&](int mode) {
    Eigen::VectorXi s = Eigen::VectorXi::Zero(6);
    s[mode - 1] = 1;
    return s;
  };
  uint32_t syn_x1 = pauli_syndrome(code.pauli_stabilizers, x_shift(1));
  uint32_t syn_x2 = pauli_syndrome(code.pauli_stabilizers, x_shift(2));
  uint32_t syn_x3 = pauli_syndrome(code.pauli_stabilizers, x_shift(3));
  CHECK(syn_x1 == 0b11u);  // anticommutes with both Z1 Z2 and Z1 Z3
  CHECK(code.syndrome_table.at(syn_x1) == x_shift(1));
  CHECK(code.syndrome_table.at(syn_x2) == x_shift(2));
  CHECK(code.syndrome_table.at(syn_x3) == x_shift(3));
  CHECK(code.syndrome_table.at(0).isZero());
}

TEST_CASE("five-qubit tables map the 15 weight-1 errors bijectively") {
  CodeInstance code = build(parse_code_id("513", Scheme::I));
  REQUIRE(code.syndrome_table.size() == 16);
  std::set<uint32_t> seen;
  for (int mode = 1; mode <= 5; ++mode) {
    for (int letter = 0; letter < 3; ++letter) {
      Eigen::VectorXi s = Eigen::VectorXi::Zero(10);
      if (letter == 0 || letter == 1) s[mode - 1] = 1;
      if (letter == 1 || letter == 2) s[5 + mode - 1] = 1;
      uint32_t syn = pauli_syndrome(code.pauli_stabilizers, s);
      CHECK(syn != 0);
      seen.insert(syn);
      CHECK(code.syndrome_table.at(syn) == s);
    }
  }
  CHECK(seen.size() == 15);
}

TEST_CASE("shor table is degenerate and picks the first representative") {
  CodeInstance code = build(parse_code_id("shor", Scheme::I));
  auto z_shift = [&](int mode) {
    Eigen::VectorXi s = Eigen::VectorXi::Zero(18);
    s[9 + mode - 1] = 1;
    return s;
  };
  uint32_t syn_z1 = pauli_syndrome(code.pauli_stabilizers, z_shift(1));
  uint32_t syn_z2 = pauli_syndrome(code.pauli_stabilizers, z_shift(2));
  CHECK(syn_z1 == syn_z2);
  CHECK(code.syndrome_table.at(syn_z1) == z_shift(1));
  CHECK(code.syndrome_table.at(syn_z1).cwiseAbs().sum() == 1);
}

TEST_CASE("syndrome counts") {
  CHECK(build(parse_code_id("rep3", Scheme::I)).syndrome_count() == 8);
  CHECK(build(parse_code_id("rep3", Scheme::II)).syndrome_count() == 4);
  CHECK(build(parse_code_id("rep3", Scheme::III)).syndrome_count() == 6);
  CHECK(build(parse_code_id("unbiased-gkp-rep:1", Scheme::III))
            .syndrome_count() == 6);
}

TEST_CASE("lattice assignment per scheme") {
  CodeInstance s1 = build(parse_code_id("rep3", Scheme::I));
  for (const auto& l : s1.lattices) CHECK(l.alpha == doctest::Approx(2.0));
  CodeInstance s2 = build(parse_code_id("rep3", Scheme::II));
  CHECK(s2.lattices[0].alpha == doctest::Approx(2.0));
  CHECK(s2.lattices[1].q_unbounded);
  CHECK(s2.lattices[2].q_unbounded);
  CodeInstance s3 = build(parse_code_id("rep3", Scheme::III));
  CHECK(s3.lattices[0].alpha == doctest::Approx(2.0));
  CHECK(s3.lattices[1].alpha == doctest::Approx(1.0));
  CHECK(s3.lattices[2].alpha == doctest::Approx(1.0));

  CodeSpec squeezed = parse_code_id("rep3", Scheme::III);
  squeezed.aux_alpha = 4.0;
  CodeInstance s3s = build(squeezed);
  CHECK(s3s.lattices[1].alpha == doctest::Approx(4.0));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(parse_code_id("rep4", Scheme::I), std::invalid_argument);
  CHECK_THROWS_AS(parse_code_id("nope", Scheme::I), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_code_id("unbiased-gkp-rep:1", Scheme::I)),
                  std::invalid_argument);
  CodeSpec bad_aux = parse_code_id("rep3", Scheme::II);
  bad_aux.aux_alpha = 2.0;
  CHECK_THROWS_AS(build(bad_aux), std::invalid_argument);
  CodeSpec bad_s1 = parse_code_id("rep3", Scheme::I);
  bad_s1.aux_alpha = 1.0;
  CHECK_THROWS_AS(build(bad_s1), std::invalid_argument);
}

TEST_CASE("unbiased syndrome map") {
  const int np = 1;
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(6);
  CHECK(unbiased_syndrome_map(np, zero).cwiseAbs().maxCoeff() == 0.0);

  Eigen::VectorXd xi = Eigen::VectorXd::Zero(6);
  xi[0] = 0.1;  // xi_{0,q}
  Eigen::VectorXd z = unbiased_syndrome_map(np, xi);
  CHECK(z[0] == doctest::Approx(0.0));  // z_{0,q}
  CHECK(z[1] == doctest::Approx(0.1));  // z_{0,p}
  CHECK(z[2] == doctest::Approx(0.1));  // z_{1,q}
  CHECK(z[3] == doctest::Approx(0.0));  // z_{2,q}
  CHECK(z[4] == doctest::Approx(0.0));
  CHECK(z[5] == doctest::Approx(0.0));

  // small noise: syndromes equal the unreduced linear forms
  RngStream rng(64, 0);
  for (int rep = 0; rep < 50; ++rep) {
    Eigen::VectorXd x(10);
    for (int i = 0; i < 10; ++i) x[i] = 0.05 * rng.normal();
    Eigen::VectorXd zz = unbiased_syndrome_map(2, x);
    auto q = [&](int m) { return x[m]; };
    auto p = [&](int m) { return x[5 + m]; };
    CHECK(zz[0] == doctest::Approx(p(1) + p(2) - p(0)));
    CHECK(zz[1] == doctest::Approx(q(0) - p(3) - p(4)));
    CHECK(zz[2] == doctest::Approx(q(1) + q(0)));
    CHECK(zz[3] == doctest::Approx(q(2) + q(0)));
    CHECK(zz[4] == doctest::Approx(q(3) + p(1) + p(2) - p(0)));
    CHECK(zz[5] == doctest::Approx(q(4) + p(1) + p(2) - p(0)));
    for (int s = 1; s <= 4; ++s) CHECK(zz[5 + s] == doctest::Approx(p(s)));
  }
  CHECK_THROWS_AS(unbiased_syndrome_map(2, zero), std::invalid_argument);
}

TEST_CASE("dump report mentions the key blocks") {
  CodeInstance code = build(parse_code_id("rep3", Scheme::I));
  std::string report = dump_report(code);
  CHECK(report.find("A_enc") != std::string::npos);
  CHECK(report.find("CNOT 1 2") != std::string::npos);
  CHECK(report.find("syndrome table entries: 4") != std::string::npos);
}

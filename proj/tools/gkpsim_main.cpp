// gkpsim command line: Monte Carlo and analytic logical-error-rate sweeps,
// squeezed-lattice studies, the qudit GKP-repetition demo, and catalog
// inspection.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "gkpsim/analytic.hpp"
#include "gkpsim/codes.hpp"
#include "gkpsim/noise.hpp"
#include "gkpsim/quditgkp.hpp"
#include "gkpsim/runner.hpp"
#include "gkpsim/version.hpp"

namespace {

using namespace gkpsim;

std::vector<Scheme> parse_schemes(const std::string& s) {
  std::vector<Scheme> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(scheme_from_string(item));
  return out;
}

std::vector<std::string> parse_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int with_output(const std::string& path, const std::function<int(std::ostream&)>& fn) {
  if (path.empty()) return fn(std::cout);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return 1;
  }
  return fn(out);
}

int cmd_qudit_sweep(const QuditParams& params) {
  std::cout << "a1,c1,a2,c2,syndrome_a,syndrome_c,residual_x,residual_x_half,"
               "residual_z,recovered\n";
  int lo = -(params.d / 2) + 1, hi = params.d / 2;
  for (int a1 = lo; a1 <= hi; ++a1)
    for (int c1 = lo; c1 <= hi; ++c1)
      for (int a2 = lo; a2 <= hi; ++a2)
        for (int c2 = lo; c2 <= hi; ++c2) {
          auto r = qudit_round(params, {a1, c1, a2, c2});
          std::cout << a1 << ',' << c1 << ',' << a2 << ',' << c2 << ','
                    << r.syndrome_a << ',' << r.syndrome_c << ','
                    << r.residual_x << ',' << r.residual_x_half << ','
                    << r.residual_z << ',' << (r.recovered ? 1 : 0) << '\n';
        }
  return 0;
}

int cmd_qudit_sample(const QuditParams& params, uint64_t n, double sigma,
                     uint64_t seed) {
  // truncated discrete Gaussian exponents, wide enough to stay in-window
  RngStream stream(seed, 0x71d17);
  int cut = params.r / 2 - 1;
  auto draw = [&]() {
    while (true) {
      int v = static_cast<int>(std::llround(sigma * stream.normal()));
      if (std::abs(v) <= cut) return v;
    }
  };
  double sx = 0, sxx = 0, sa = 0, saa = 0, sh = 0, shh = 0;
  for (uint64_t i = 0; i < n; ++i) {
    QuditError err{draw(), draw(), draw(), draw()};
    auto r = qudit_round(params, err);
    sa += err.a1;
    saa += static_cast<double>(err.a1) * err.a1;
    sx += r.residual_x;
    sxx += static_cast<double>(r.residual_x) * r.residual_x;
    sh += r.residual_x_half;
    shh += r.residual_x_half * r.residual_x_half;
  }
  double inv = 1.0 / static_cast<double>(n);
  double var_a = saa * inv - (sa * inv) * (sa * inv);
  double var_x = sxx * inv - (sx * inv) * (sx * inv);
  double var_h = shh * inv - (sh * inv) * (sh * inv);
  std::cout << "samples=" << n << " d=" << params.d << " r=" << params.r
            << " sigma=" << sigma << "\n";
  std::cout << "var(a1)=" << var_a << "\n";
  std::cout << "var(residual_x)=" << var_x << "  ratio=" << var_x / var_a
            << "\n";
  std::cout << "var(residual_x_half)=" << var_h << "  ratio=" << var_h / var_a
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gkpsim: concatenated qubit-oscillator code simulator"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // ---- run / analytic ----
  RunConfig config;
  std::string codes_arg = "rep3", schemes_arg = "III", sigma_arg = "0.2";
  std::string config_file;
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--code", codes_arg, "comma-separated code ids");
    cmd->add_option("--scheme", schemes_arg, "comma-separated schemes (I,II,III)");
    cmd->add_option("--sigma", sigma_arg, "sigma list 'a,b,c' or range 'a:b:c'");
    cmd->add_option("--seed", config.seed, "base RNG seed");
    cmd->add_option("--alpha-aux", config.alpha_aux,
                    "auxiliary lattice aspect ratio (0 = scheme default)");
    cmd->add_option("--alpha-logical", config.alpha_logical,
                    "logical lattice aspect ratio");
    cmd->add_option("--out", config.out, "output CSV path (default stdout)");
    cmd->add_option("--config", config_file, "key=value config file");
  };

  CLI::App* run = app.add_subcommand("run", "Monte Carlo error-rate sweep");
  add_run_flags(run);
  run->add_option("--samples", config.samples, "samples per cell");
  run->add_option("--threads", config.threads, "worker threads (0 = auto)");
  run->add_option("--target-rel-stderr", config.target_rel_stderr,
                  "optional early-stop relative stderr");
  std::string method_arg = "montecarlo";
  run->add_option("--method", method_arg, "montecarlo or analytic");
  bool reduce = false;
  run->add_flag("--reduce-generators", reduce,
                "decode scheme III with the reduced generator basis");

  CLI::App* analytic =
      app.add_subcommand("analytic", "closed-form rep3 error rates");
  add_run_flags(analytic);

  // ---- squeeze-study ----
  CLI::App* squeeze = app.add_subcommand(
      "squeeze-study", "error-rate ratio versus lattice squeezing");
  std::string sq_code = "rep3", sq_scheme = "III", sq_alphas = "0.5,1,2,4";
  double sq_sigma = 0.2;
  uint64_t sq_samples = 1000000, sq_seed = 1;
  int sq_threads = 0;
  std::string sq_out;
  squeeze->add_option("--code", sq_code);
  squeeze->add_option("--scheme", sq_scheme, "I or III");
  squeeze->add_option("--alpha", sq_alphas, "comma-separated squeeze factors");
  squeeze->add_option("--sigma", sq_sigma);
  squeeze->add_option("--samples", sq_samples);
  squeeze->add_option("--seed", sq_seed);
  squeeze->add_option("--threads", sq_threads);
  squeeze->add_option("--out", sq_out);

  // ---- qudit ----
  CLI::App* qudit = app.add_subcommand("qudit", "qudit GKP-repetition demo");
  int qd = 16, qr = 4;
  bool qsweep = false;
  uint64_t qsamples = 0, qseed = 1;
  double qsigma = 2.5;
  qudit->add_option("--d", qd, "qudit dimension");
  qudit->add_option("--r", qr, "ancilla spacing");
  qudit->add_flag("--sweep", qsweep, "exhaustive error sweep (small d)");
  qudit->add_option("--sample", qsamples, "statistical run with N draws");
  qudit->add_option("--sigma-a", qsigma, "exponent std dev for --sample");
  qudit->add_option("--seed", qseed);

  // ---- catalog / circuit ----
  CLI::App* catalog = app.add_subcommand("catalog", "print a code instance");
  std::string cat_code = "rep3", cat_scheme = "III";
  catalog->add_option("--code", cat_code);
  catalog->add_option("--scheme", cat_scheme);

  CLI::App* circuit =
      app.add_subcommand("circuit", "parse a circuit file and print its matrix");
  std::string circ_file;
  int circ_n = 0;
  circuit->add_option("--file", circ_file)->required();
  circuit->add_option("--modes", circ_n, "mode count")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed() || analytic->parsed()) {
      if (!config_file.empty()) apply_config_file(config_file, config);
      // flags override config-file values
      CLI::App* cmd = run->parsed() ? run : analytic;
      if (cmd->count("--code") || config.codes.empty())
        config.codes = parse_list(codes_arg);
      if (cmd->count("--scheme") || config.schemes.empty())
        config.schemes = parse_schemes(schemes_arg);
      if (cmd->count("--sigma") || config.sigmas.empty())
        config.sigmas = parse_sigma_spec(sigma_arg);
      config.method = analytic->parsed() ? "analytic" : method_arg;
      if (reduce) config.reduce_generators = true;
      return with_output(config.out, [&](std::ostream& os) {
        return run_config(config, os, std::cerr);
      });
    }
    if (squeeze->parsed()) {
      std::vector<double> alphas;
      for (const auto& a : parse_list(sq_alphas)) alphas.push_back(std::stod(a));
      EstimateOptions opts;
      opts.threads = sq_threads;
      return with_output(sq_out, [&](std::ostream& os) {
        return squeeze_study(sq_code, scheme_from_string(sq_scheme), alphas,
                             sq_sigma, sq_samples, sq_seed, opts, os, std::cerr);
      });
    }
    if (qudit->parsed()) {
      QuditParams params(qd, qr);
      if (qsweep) return cmd_qudit_sweep(params);
      if (qsamples > 0) return cmd_qudit_sample(params, qsamples, qsigma, qseed);
      std::cerr << "qudit: pass --sweep or --sample N\n";
      return 1;
    }
    if (catalog->parsed()) {
      CodeSpec spec = parse_code_id(cat_code, scheme_from_string(cat_scheme));
      std::cout << dump_report(build(spec));
      return 0;
    }
    if (circuit->parsed()) {
      std::ifstream in(circ_file);
      if (!in) throw std::invalid_argument("cannot open " + circ_file);
      std::stringstream buf;
      buf << in.rdbuf();
      GaussianCircuit c = parse_circuit(buf.str(), circ_n);
      Eigen::MatrixXd a = compose(c);
      Eigen::IOFormat fmt(Eigen::StreamPrecision, 0, " ", "\n", "  [", "]");
      std::cout << "gates: " << c.gates.size() << "\n"
                << a.format(fmt) << "\nsymplectic: "
                << (check_symplectic(a) ? "yes" : "NO") << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

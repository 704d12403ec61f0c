#pragma once

// Experiment runner behind the command line tool: parameter sweeps to CSV.
//
// The CSV contract: one '#'-prefixed metadata block (version, seed, config,
// timestamp), then a fixed header `code,scheme,sigma,samples,p_emp,stderr,
// seed,method` and one row per cell with numbers rendered to 6 significant
// digits.  Re-running the same config reproduces the data section byte for
// byte; only the metadata timestamp changes.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gkpsim/codes.hpp"
#include "gkpsim/montecarlo.hpp"

namespace gkpsim {

struct RunConfig {
  std::vector<std::string> codes;
  std::vector<Scheme> schemes;
  std::vector<double> sigmas;
  uint64_t samples = 1000000;
  uint64_t seed = 1;
  std::string method = "montecarlo";  // or "analytic"
  double alpha_aux = 0.0;             // 0 = scheme default
  double alpha_logical = 2.0;
  bool reduce_generators = false;
  int threads = 0;
  double target_rel_stderr = 0.0;
  std::string out;  // output path; empty = stdout

  void validate() const;
};

/// "0.14:0.30:0.02" (start:stop:step, inclusive) or "0.1,0.2,0.3".
std::vector<double> parse_sigma_spec(const std::string& spec);

/// Flat key=value config file; '#' comments allowed.  Keys mirror the CLI
/// flags: code, scheme, sigma, samples, seed, method, alpha-aux,
/// alpha-logical, reduce-generators, threads, out.
void apply_config_file(const std::string& path, RunConfig& config);
void apply_config_key(const std::string& key, const std::string& value,
                      RunConfig& config);

/// Runs the sweep and writes CSV. Returns 0 on success, 1 if any cell failed.
int run_config(const RunConfig& config, std::ostream& csv,
               std::ostream& diagnostics);

/// Squeezed-lattice study: logical error rate ratio p(alpha)/p(1) for a list
/// of squeeze parameters.  Scheme I squeezes every mode, scheme III only the
/// auxiliary modes.
int squeeze_study(const std::string& code_id, Scheme scheme,
                  const std::vector<double>& alphas, double sigma, uint64_t m,
                  uint64_t seed, const EstimateOptions& opts, std::ostream& csv,
                  std::ostream& diagnostics);

std::string format_csv_row(const ErrorRateEstimate& est,
                           const std::string& method);

}  // namespace gkpsim

#pragma once

// Monte Carlo estimation of logical error rates.
//
// Sampling is organized in fixed-size batches; batch b of a cell draws its
// noise from the substream (seed, cell stream, b), so results are
// bit-identical for any worker count and batches may run in any order.  The
// cell stream is derived from the code id and sigma only, which makes
// estimates for different schemes of the same code see identical noise
// (paired comparisons come for free).

#include <cstdint>
#include <string>
#include <vector>

#include "gkpsim/codes.hpp"
#include "gkpsim/decoder.hpp"

namespace gkpsim {

struct EstimateOptions {
  int threads = 0;                 // <= 0: GKPSIM_THREADS env or OpenMP default
  int batch_size = 1 << 16;        // samples per substream
  double target_rel_stderr = 0.0;  // > 0 enables early stopping
  bool collect_moments = false;    // accumulate residual moments + flag counts
};

struct ErrorRateEstimate {
  std::string code;
  Scheme scheme = Scheme::III;
  double sigma = 0.0;
  uint64_t samples = 0;
  double p_emp = 0.0;
  double std_err = 0.0;  // sqrt(p_emp (1 - p_emp) / samples)
  uint64_t seed = 0;
  double wall_seconds = 0.0;

  // filled when EstimateOptions::collect_moments is set
  Eigen::VectorXd layer1_mean, layer1_second_moment;  // per logical quadrature
  Eigen::VectorXd final_mean, final_second_moment;
  Eigen::VectorXd layer1_flag_rate, final_flag_rate;  // per logical quadrature

  Eigen::VectorXd layer1_variance() const {
    return layer1_second_moment - layer1_mean.cwiseProduct(layer1_mean);
  }
  Eigen::VectorXd final_variance() const {
    return final_second_moment - final_mean.cwiseProduct(final_mean);
  }
};

/// Deterministic stream id shared by all schemes of one code at one sigma.
uint64_t cell_stream_id(const std::string& code_id, double sigma);

ErrorRateEstimate estimate(const CodeInstance& code, double sigma, uint64_t m,
                           uint64_t seed, const EstimateOptions& opts = {});

/// Cartesian product of codes x schemes x sigmas.
std::vector<ErrorRateEstimate> sweep(const std::vector<std::string>& code_ids,
                                     const std::vector<Scheme>& schemes,
                                     const std::vector<double>& sigmas,
                                     uint64_t m, uint64_t seed,
                                     const EstimateOptions& opts = {},
                                     double aux_alpha = 0.0,
                                     double logical_alpha = 2.0,
                                     bool reduce_generators = false);

}  // namespace gkpsim

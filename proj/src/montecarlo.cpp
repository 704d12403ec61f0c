#include "gkpsim/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gkpsim/noise.hpp"

namespace gkpsim {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GKPSIM_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

uint64_t hash_string(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct BatchAccum {
  uint64_t errors = 0;
  Eigen::VectorXd l1_sum, l1_sq, fin_sum, fin_sq;
  Eigen::VectorXd l1_flags, fin_flags;

  void init(int dim) {
    l1_sum = Eigen::VectorXd::Zero(dim);
    l1_sq = Eigen::VectorXd::Zero(dim);
    fin_sum = Eigen::VectorXd::Zero(dim);
    fin_sq = Eigen::VectorXd::Zero(dim);
    l1_flags = Eigen::VectorXd::Zero(dim);
    fin_flags = Eigen::VectorXd::Zero(dim);
  }
};

}  // namespace

uint64_t cell_stream_id(const std::string& code_id, double sigma) {
  uint64_t bits;
  static_assert(sizeof(bits) == sizeof(sigma));
  std::memcpy(&bits, &sigma, sizeof(bits));
  return detail::splitmix64(hash_string(code_id) ^ detail::splitmix64(bits));
}

ErrorRateEstimate estimate(const CodeInstance& code, double sigma, uint64_t m,
                           uint64_t seed, const EstimateOptions& opts) {
  if (m < 1) throw std::invalid_argument("estimate: need at least one sample");
  const auto t0 = std::chrono::steady_clock::now();
  const int threads = resolve_threads(opts.threads);
  const uint64_t batch = static_cast<uint64_t>(opts.batch_size);
  const uint64_t n_batches = (m + batch - 1) / batch;
  const NoiseModel model(sigma, code.n);
  const RngStream cell_root =
      RngStream(seed, cell_stream_id(code.id, sigma));

  std::vector<uint64_t> errors(n_batches, 0);
  std::vector<BatchAccum> accums;
  const bool moments = opts.collect_moments;
  if (moments) accums.resize(n_batches);

  // early stopping works on fixed chunks of batches so that the processed
  // sample count does not depend on the worker count
  const uint64_t chunk = opts.target_rel_stderr > 0.0 ? 64 : n_batches;
  uint64_t done_batches = 0;
  uint64_t total_samples = 0;
  uint64_t total_errors = 0;
  std::string failure;

  while (done_batches < n_batches) {
    const uint64_t hi =
        std::min<uint64_t>(n_batches, done_batches + chunk);
    const int64_t lo_i = static_cast<int64_t>(done_batches);
    const int64_t hi_i = static_cast<int64_t>(hi);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (int64_t bi = lo_i; bi < hi_i; ++bi) {
      const uint64_t b = static_cast<uint64_t>(bi);
      const uint64_t first = b * batch;
      const uint64_t count = std::min<uint64_t>(batch, m - first);
      RngStream stream = cell_root.substream(b);
      BatchAccum acc;
      if (moments) acc.init(2 * code.k);
      uint64_t errs = 0;
      try {
        for (uint64_t s = 0; s < count; ++s) {
          Eigen::VectorXd xi = sample(model, stream);
          DecodeResult res = decode(xi, code);
          if (res.any_flag) ++errs;
          if (moments) {
            acc.l1_sum += res.layer1_logical;
            acc.l1_sq += res.layer1_logical.cwiseProduct(res.layer1_logical);
            acc.fin_sum += res.xi_final_logical;
            acc.fin_sq +=
                res.xi_final_logical.cwiseProduct(res.xi_final_logical);
            auto l1_flags = logical_error_flags(res.layer1_logical);
            for (int j = 0; j < 2 * code.k; ++j) {
              if (l1_flags[j]) acc.l1_flags[j] += 1.0;
              if (res.flags[j]) acc.fin_flags[j] += 1.0;
            }
          }
        }
      } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (failure.empty())
          failure = "decoder failed at seed " + std::to_string(seed) +
                    ", batch " + std::to_string(b) + ": " + e.what();
      }
      errors[b] = errs;
      if (moments) accums[b] = std::move(acc);
    }
    if (!failure.empty()) throw std::runtime_error(failure);
    for (uint64_t b = done_batches; b < hi; ++b) {
      total_errors += errors[b];
      total_samples += std::min<uint64_t>(batch, m - b * batch);
    }
    done_batches = hi;
    if (opts.target_rel_stderr > 0.0 && total_errors > 0) {
      double p = static_cast<double>(total_errors) / total_samples;
      double rel = std::sqrt((1.0 - p) / (p * total_samples));
      if (rel < opts.target_rel_stderr) break;
    }
  }

  ErrorRateEstimate est;
  est.code = code.id;
  est.scheme = code.spec.scheme;
  est.sigma = sigma;
  est.samples = total_samples;
  est.seed = seed;
  est.p_emp = static_cast<double>(total_errors) / total_samples;
  est.std_err = std::sqrt(est.p_emp * (1.0 - est.p_emp) / total_samples);
  if (moments) {
    BatchAccum all;
    all.init(2 * code.k);
    for (uint64_t b = 0; b < done_batches; ++b) {
      all.errors += accums[b].errors;
      all.l1_sum += accums[b].l1_sum;
      all.l1_sq += accums[b].l1_sq;
      all.fin_sum += accums[b].fin_sum;
      all.fin_sq += accums[b].fin_sq;
      all.l1_flags += accums[b].l1_flags;
      all.fin_flags += accums[b].fin_flags;
    }
    double inv = 1.0 / static_cast<double>(total_samples);
    est.layer1_mean = all.l1_sum * inv;
    est.layer1_second_moment = all.l1_sq * inv;
    est.final_mean = all.fin_sum * inv;
    est.final_second_moment = all.fin_sq * inv;
    est.layer1_flag_rate = all.l1_flags * inv;
    est.final_flag_rate = all.fin_flags * inv;
  }
  est.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return est;
}

std::vector<ErrorRateEstimate> sweep(const std::vector<std::string>& code_ids,
                                     const std::vector<Scheme>& schemes,
                                     const std::vector<double>& sigmas,
                                     uint64_t m, uint64_t seed,
                                     const EstimateOptions& opts,
                                     double aux_alpha, double logical_alpha,
                                     bool reduce_generators) {
  std::vector<ErrorRateEstimate> out;
  for (const std::string& id : code_ids) {
    for (Scheme scheme : schemes) {
      CodeSpec spec = parse_code_id(id, scheme);
      spec.aux_alpha = aux_alpha;
      spec.logical_alpha = logical_alpha;
      spec.reduce_generators = reduce_generators;
      CodeInstance code = build(spec);
      for (double sigma : sigmas)
        out.push_back(estimate(code, sigma, m, seed, opts));
    }
  }
  return out;
}

}  // namespace gkpsim

#pragma once

// Closed-form / quadrature logical error rates for the three-mode repetition
// code under i.i.d. Gaussian displacement noise, plus the generic
// window-mass machinery they are built from.
//
// All rates are probabilities that a residual logical quadrature leaves the
// GKP-correctable windows: intervals of half-width sqrt(pi)/2 centered at
// even multiples of sqrt(pi).

#include <vector>

namespace gkpsim {

/// Lattice-sum truncation and quadrature controls.
struct QuadratureGrid {
  double trunc_sigmas = 8.0;  // keep lattice terms within this many sigma
  int min_terms = 5;          // minimum lattice indices on each side
  double panel_tol = 1e-10;   // adaptive 2-D panel tolerance
};

struct RateResult {
  double value = 0.0;
  double trunc_error = 0.0;  // estimated lattice/window truncation error
  bool warning = false;      // trunc_error above 1e-8

  operator double() const { return value; }
};

enum class WindowCenters { Even, All };

/// Total mass of Normal(mean, sigma^2) inside windows [c - w, c + w) with
/// centers c at (even) multiples of the period.
double gaussian_window_mass(double sigma, double period, double half_width,
                            WindowCenters centers, double mean = 0.0,
                            const QuadratureGrid& grid = {});

/// Probability that a standard GKP qubit quadrature with noise deviation
/// sigma is corrected without a logical flip.
double gkp_no_error_probability(double sigma);

RateResult scheme1_rep3_rate(double sigma, const QuadratureGrid& grid = {});
RateResult scheme2_rep3_rate(double sigma, const QuadratureGrid& grid = {});
RateResult scheme3_rep3_rate(double sigma, const QuadratureGrid& grid = {});

// Per-quadrature no-error factors, exposed for cross-checks.
double scheme2_rep3_correct_q(double sigma, const QuadratureGrid& grid = {});
double scheme2_rep3_correct_p(double sigma, const QuadratureGrid& grid = {});
RateResult scheme3_rep3_correct_q(double sigma, const QuadratureGrid& grid = {});
RateResult scheme3_rep3_correct_p(double sigma, const QuadratureGrid& grid = {});

/// Monte Carlo estimator of the no-error probability from empirical samples
/// of a residual logical quadrature.
double displacement_distribution_rate(const std::vector<double>& samples,
                                      double period, double half_width);

}  // namespace gkpsim

#include "gkpsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gkpsim/lattice.hpp"

namespace gkpsim {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

// 12-point Gauss-Legendre nodes/weights on [-1, 1] (positive half).
const double kGlNodes[6] = {0.1252334085114689, 0.3678314989981802,
                            0.5873179542866175, 0.7699026741943047,
                            0.9041172563704749, 0.9815606342467192};
const double kGlWeights[6] = {0.2491470458134028, 0.2334925365383548,
                              0.2031674267230659, 0.1600783285433462,
                              0.1069393259953184, 0.0471753363865118};

template <typename F>
double gl12_2d(const F& f, double ax, double bx, double ay, double by) {
  double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    double xs[2] = {cx - hx * kGlNodes[i], cx + hx * kGlNodes[i]};
    for (double x : xs) {
      double row = 0.0;
      for (int j = 0; j < 6; ++j) {
        row += kGlWeights[j] * (f(x, cy - hy * kGlNodes[j]) +
                                f(x, cy + hy * kGlNodes[j]));
      }
      sum += kGlWeights[i] * row;
    }
  }
  return sum * hx * hy;
}

// Adaptive tensor quadrature: split a panel in four until the refinement
// stops moving the result by more than tol.
template <typename F>
double integrate2d(const F& f, double ax, double bx, double ay, double by,
                   double tol, int depth = 0) {
  double coarse = gl12_2d(f, ax, bx, ay, by);
  double mx = 0.5 * (ax + bx), my = 0.5 * (ay + by);
  double fine = gl12_2d(f, ax, mx, ay, my) + gl12_2d(f, mx, bx, ay, my) +
                gl12_2d(f, ax, mx, my, by) + gl12_2d(f, mx, bx, my, by);
  if (std::abs(fine - coarse) <= tol || depth >= 14) return fine;
  double quarter_tol = 0.25 * tol;
  return integrate2d(f, ax, mx, ay, my, quarter_tol, depth + 1) +
         integrate2d(f, mx, bx, ay, my, quarter_tol, depth + 1) +
         integrate2d(f, ax, mx, my, by, quarter_tol, depth + 1) +
         integrate2d(f, mx, bx, my, by, quarter_tol, depth + 1);
}

int lattice_terms(double sigma, double spacing, double half_width,
                  const QuadratureGrid& grid) {
  double reach = grid.trunc_sigmas * sigma + half_width + spacing;
  return std::max(grid.min_terms, static_cast<int>(std::ceil(reach / spacing)));
}

}  // namespace

double gaussian_window_mass(double sigma, double period, double half_width,
                            WindowCenters centers, double mean,
                            const QuadratureGrid& grid) {
  if (!(sigma > 0.0) || !(period > 0.0) || !(half_width > 0.0))
    throw std::invalid_argument("gaussian_window_mass: parameters must be > 0");
  const double spacing = centers == WindowCenters::Even ? 2.0 * period : period;
  const int terms =
      lattice_terms(sigma, spacing, half_width + std::abs(mean), grid);
  double mass = 0.0;
  for (int m = -terms; m <= terms; ++m) {
    double c = m * spacing;
    mass += normal_cdf((c + half_width - mean) / sigma) -
            normal_cdf((c - half_width - mean) / sigma);
  }
  return mass;
}

double gkp_no_error_probability(double sigma) {
  return gaussian_window_mass(sigma, kSqrtPi, 0.5 * kSqrtPi,
                              WindowCenters::Even);
}

RateResult scheme1_rep3_rate(double sigma, const QuadratureGrid& grid) {
  (void)grid;
  double p0 = gkp_no_error_probability(sigma);
  // no logical X: at most one of three q displacements flips;
  // no logical Z: an even number of p displacements flip
  double no_x = p0 * p0 * p0 + 3.0 * p0 * p0 * (1.0 - p0);
  double no_z = p0 * p0 * p0 + 3.0 * p0 * (1.0 - p0) * (1.0 - p0);
  RateResult r;
  r.value = 1.0 - no_z * no_x;
  return r;
}

double scheme2_rep3_correct_q(double sigma, const QuadratureGrid& grid) {
  // logical q residual is the three-mode mean, Normal(0, sigma^2/3)
  return gaussian_window_mass(sigma / std::sqrt(3.0), kSqrtPi, 0.5 * kSqrtPi,
                              WindowCenters::Even, 0.0, grid);
}

double scheme2_rep3_correct_p(double sigma, const QuadratureGrid& grid) {
  // logical p residual is the three-mode sum, Normal(0, 3 sigma^2)
  return gaussian_window_mass(sigma * std::sqrt(3.0), kSqrtPi, 0.5 * kSqrtPi,
                              WindowCenters::Even, 0.0, grid);
}

RateResult scheme2_rep3_rate(double sigma, const QuadratureGrid& grid) {
  RateResult r;
  r.value = 1.0 - scheme2_rep3_correct_q(sigma, grid) *
                      scheme2_rep3_correct_p(sigma, grid);
  return r;
}

RateResult scheme3_rep3_correct_q(double sigma, const QuadratureGrid& grid) {
  // Layer 1 measures y = xi_2q - xi_1q and z = xi_3q - xi_1q modulo
  // sqrt(2 pi).  Conditional on the wrap counts (ny, nz) the logical q
  // residual is Normal(sqrt(2 pi)(ny+nz)/3, sigma^2/3); the weight of the
  // pair is the mass of the correlated (y, z) Gaussian over the wrap cell.
  const double var = sigma * sigma;
  const double spacing = kSqrt2Pi;
  const int terms = lattice_terms(std::sqrt(2.0 * var), spacing, 0.0, grid);
  const double norm = 1.0 / (2.0 * M_PI * var * std::sqrt(3.0));
  auto density = [&](double y, double z) {
    return norm * std::exp(-(y * y - y * z + z * z) / (3.0 * var));
  };
  RateResult r;
  double covered = 0.0;
  for (int ny = -terms; ny <= terms; ++ny) {
    for (int nz = -terms; nz <= terms; ++nz) {
      double j = integrate2d(density, (ny - 0.5) * spacing, (ny + 0.5) * spacing,
                             (nz - 0.5) * spacing, (nz + 0.5) * spacing,
                             grid.panel_tol);
      if (j < 1e-16) continue;
      covered += j;
      double c = spacing * (ny + nz) / 3.0;
      r.value += j * gaussian_window_mass(sigma / std::sqrt(3.0), kSqrtPi,
                                          0.5 * kSqrtPi, WindowCenters::Even,
                                          c, grid);
    }
  }
  r.trunc_error = std::abs(1.0 - covered);
  r.warning = r.trunc_error > 1e-8;
  return r;
}

RateResult scheme3_rep3_correct_p(double sigma, const QuadratureGrid& grid) {
  // xi_2p and xi_3p wrap independently; each wrap shifts the logical p
  // residual xi_1p by a full sqrt(2 pi).
  const double spacing = kSqrt2Pi;
  const int terms = lattice_terms(sigma, spacing, 0.0, grid);
  RateResult r;
  double covered = 0.0;
  std::vector<double> wrap_mass(2 * terms + 1);
  for (int m = -terms; m <= terms; ++m)
    wrap_mass[m + terms] = normal_cdf(((m + 0.5) * spacing) / sigma) -
                           normal_cdf(((m - 0.5) * spacing) / sigma);
  for (int ny = -terms; ny <= terms; ++ny) {
    for (int nz = -terms; nz <= terms; ++nz) {
      double w = wrap_mass[ny + terms] * wrap_mass[nz + terms];
      if (w < 1e-18) continue;
      covered += w;
      r.value += w * gaussian_window_mass(sigma, kSqrtPi, 0.5 * kSqrtPi,
                                          WindowCenters::Even,
                                          spacing * (ny + nz), grid);
    }
  }
  r.trunc_error = std::abs(1.0 - covered);
  r.warning = r.trunc_error > 1e-8;
  return r;
}

RateResult scheme3_rep3_rate(double sigma, const QuadratureGrid& grid) {
  RateResult q = scheme3_rep3_correct_q(sigma, grid);
  RateResult p = scheme3_rep3_correct_p(sigma, grid);
  RateResult r;
  r.value = 1.0 - q.value * p.value;
  r.trunc_error = q.trunc_error + p.trunc_error;
  r.warning = r.trunc_error > 1e-8;
  return r;
}

double displacement_distribution_rate(const std::vector<double>& samples,
                                      double period, double half_width) {
  if (samples.empty())
    throw std::invalid_argument("displacement_distribution_rate: no samples");
  size_t hits = 0;
  for (double x : samples)
    if (std::abs(remainder(x, 2.0 * period)) < half_width) ++hits;
  return static_cast<double>(hits) / static_cast<double>(samples.size());
}

}  // namespace gkpsim

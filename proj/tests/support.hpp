#pragma once

// Test-only oracles. Nothing here calls the closed forms under test.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>

#include "gaussmix/gaussian.hpp"

namespace gaussmix::testing {

inline constexpr double kPi = std::numbers::pi;

/// Symplectic spectrum as the moduli of the eigenvalues of i Omega cm,
/// found with a generic complex eigensolver. Each value appears twice.
inline std::pair<double, double> symplectic_oracle(const Mat4& cm) {
  const Eigen::Matrix4cd m = std::complex<double>(0.0, 1.0) * symplectic_form().cast<std::complex<double>>() *
                             cm.cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m, false);
  std::array<double, 4> mods{};
  for (int i = 0; i < 4; ++i) mods[static_cast<std::size_t>(i)] = std::abs(solver.eigenvalues()(i));
  std::sort(mods.begin(), mods.end());
  return {0.5 * (mods[0] + mods[1]), 0.5 * (mods[2] + mods[3])};
}

/// Covariance matrix of a single-mode state written directly from
/// S(r, psi) nu_th S^dag: R(psi/2) diag(e^{2r}, e^{-2r}) R(psi/2)^T (1 + 2N) / 2,
/// with the squeezing axis convention that psi = 0 squeezes p.
inline Mat2 squeezed_thermal_cm(double r, double psi, double n) {
  const double c = std::cos(-psi / 2.0);
  const double s = std::sin(-psi / 2.0);
  Mat2 rot;
  rot << c, -s, s, c;
  Mat2 d = Mat2::Zero();
  d(0, 0) = std::exp(2.0 * r);
  d(1, 1) = std::exp(-2.0 * r);
  return 0.5 * (1.0 + 2.0 * n) * rot * d * rot.transpose();
}

/// Global minimum of f on [lo, hi]: coarse grid, then golden-section
/// refinement inside the bracket around the best grid point.
template <class F>
std::pair<double, double> minimize_1d(F&& f, double lo, double hi, int grid = 256, double tol = 1e-13) {
  int best = 0;
  double best_val = f(lo);
  const double step = (hi - lo) / grid;
  for (int i = 1; i <= grid; ++i) {
    const double v = f(lo + step * i);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = lo + step * std::max(best - 1, 0);
  double b = lo + step * std::min(best + 1, grid);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  return fx < best_val ? std::pair{x, fx} : std::pair{lo + step * best, best_val};
}

/// Random physical parameters for property tests.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  GaussianParams params(double r_max = 2.0, double n_max = 2.0, double alpha_max = 0.0) {
    GaussianParams p;
    p.r = uniform(0.0, r_max);
    p.psi = uniform(0.0, 2.0 * kPi);
    p.n_th = uniform(0.0, n_max);
    if (alpha_max > 0.0) {
      p.alpha_re = uniform(-alpha_max, alpha_max) / std::numbers::sqrt2;
      p.alpha_im = uniform(-alpha_max, alpha_max) / std::numbers::sqrt2;
    }
    return p;
  }
  double tau() { return uniform(1e-6, 1.0 - 1e-6); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gaussmix::testing

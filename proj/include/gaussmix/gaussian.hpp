#pragma once

// Single- and two-mode Gaussian states in phase space.
//
// Conventions used throughout the library:
//   * hbar = 1, q = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)).
//   * The vacuum covariance matrix is I/2. A two-mode state is separable
//     iff the smallest symplectic eigenvalue of its partial transpose is
//     >= 1/2, and every threshold in this library assumes this scale.
//   * Two-mode vectors and matrices use the ordering (q1, p1, q2, p2), so
//     the per-mode blocks are contiguous 2x2 submatrices.

#include <Eigen/Dense>

namespace gaussmix {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Tolerance on symplectic eigenvalues when deciding physicality.
inline constexpr double kPhysicalityTol = 1e-10;

/// Physical parametrization of a single-mode Gaussian state
/// rho = D(alpha) S(xi) nu_th(N) S^dag(xi) D^dag(alpha), with xi = r e^{i psi}.
struct GaussianParams {
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double r = 0.0;    ///< squeezing magnitude, >= 0
  double psi = 0.0;  ///< squeezing phase [rad]
  double n_th = 0.0; ///< mean thermal photon number, >= 0

  /// mu = 1 / (1 + 2 N)
  [[nodiscard]] double purity() const { return 1.0 / (1.0 + 2.0 * n_th); }
  [[nodiscard]] bool has_displacement() const { return alpha_re != 0.0 || alpha_im != 0.0; }

  friend bool operator==(const GaussianParams&, const GaussianParams&) = default;
};

/// Wraps an angle into [0, 2 pi).
double normalize_phase(double angle);

/// Returns a copy with psi normalized into [0, 2 pi).
/// Throws InvalidParameter if r < 0, n_th < 0 or any field is not finite.
GaussianParams validated(const GaussianParams& p);

struct SingleModeState {
  Vec2 mean = Vec2::Zero();
  Mat2 cm = 0.5 * Mat2::Identity();
};

struct TwoModeState {
  Vec4 mean = Vec4::Zero();
  Mat4 cm = 0.5 * Mat4::Identity();

  [[nodiscard]] Mat2 sigma1() const { return cm.block<2, 2>(0, 0); }
  [[nodiscard]] Mat2 sigma2() const { return cm.block<2, 2>(2, 2); }
  [[nodiscard]] Mat2 sigma12() const { return cm.block<2, 2>(0, 2); }
};

/// Builds mean and covariance matrix from physical parameters:
///   mean     = sqrt(2) (Re alpha, Im alpha)
///   cm(k,k)  = (2 mu)^-1 [cosh 2r - (-1)^k cos(psi) sinh 2r],  k = 1, 2
///   cm(1,2)  = -(2 mu)^-1 sin(psi) sinh 2r
SingleModeState state_from_params(const GaussianParams& p);

/// (2 sqrt(det cm))^-1. Throws NonPhysicalState when det cm < 1/4 - 1e-10.
double purity(const SingleModeState& s);

/// True iff cm (2x2 for one mode, 4x4 for two) is symmetric, positive
/// definite and all its symplectic eigenvalues are >= 1/2 - kPhysicalityTol.
/// Throws DimensionMismatch if the shape does not match `modes` or modes
/// is not 1 or 2.
bool validate_physical(const Eigen::Ref<const Eigen::MatrixXd>& cm, int modes);

/// Two-mode symplectic form Omega = diag(J, J), J = [[0, 1], [-1, 0]].
Mat4 symplectic_form();

}  // namespace gaussmix

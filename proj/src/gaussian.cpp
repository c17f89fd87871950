#include "gaussmix/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gaussmix/errors.hpp"

namespace gaussmix {

namespace {

constexpr double kSymmetryTol = 1e-12;

bool is_symmetric(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  return ((m - m.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTol * std::max(1.0, m.cwiseAbs().maxCoeff()));
}

}  // namespace

double normalize_phase(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(angle, two_pi);
  if (wrapped < 0.0) wrapped += two_pi;
  // fmod of a tiny negative value can round up to exactly 2 pi
  if (wrapped >= two_pi) wrapped = 0.0;
  return wrapped;
}

GaussianParams validated(const GaussianParams& p) {
  if (!std::isfinite(p.alpha_re) || !std::isfinite(p.alpha_im) || !std::isfinite(p.r) ||
      !std::isfinite(p.psi) || !std::isfinite(p.n_th)) {
    throw InvalidParameter("Gaussian parameters must be finite");
  }
  if (p.r < 0.0) throw InvalidParameter("squeezing magnitude r must be >= 0, got " + std::to_string(p.r));
  if (p.n_th < 0.0) throw InvalidParameter("thermal photon number must be >= 0, got " + std::to_string(p.n_th));
  GaussianParams out = p;
  out.psi = normalize_phase(p.psi);
  return out;
}

SingleModeState state_from_params(const GaussianParams& params) {
  const GaussianParams p = validated(params);
  const double scale = 0.5 / p.purity();  // (2 mu)^-1 = (1 + 2N) / 2
  const double ch = std::cosh(2.0 * p.r);
  const double sh = std::sinh(2.0 * p.r);

  SingleModeState s;
  s.mean << std::numbers::sqrt2 * p.alpha_re, std::numbers::sqrt2 * p.alpha_im;
  s.cm(0, 0) = scale * (ch + std::cos(p.psi) * sh);
  s.cm(1, 1) = scale * (ch - std::cos(p.psi) * sh);
  s.cm(0, 1) = s.cm(1, 0) = -scale * std::sin(p.psi) * sh;
  return s;
}

double purity(const SingleModeState& s) {
  const double det = s.cm.determinant();
  if (!(det >= 0.25 - kPhysicalityTol)) {
    throw NonPhysicalState("det(cm) = " + std::to_string(det) + " violates det >= 1/4");
  }
  return 0.5 / std::sqrt(det);
}

Mat4 symplectic_form() {
  Mat4 omega = Mat4::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  return omega;
}

bool validate_physical(const Eigen::Ref<const Eigen::MatrixXd>& cm, int modes) {
  if (modes != 1 && modes != 2) {
    throw DimensionMismatch("only one- and two-mode states are supported, got modes = " + std::to_string(modes));
  }
  if (cm.rows() != 2 * modes || cm.cols() != 2 * modes) {
    throw DimensionMismatch("expected a " + std::to_string(2 * modes) + "x" + std::to_string(2 * modes) +
                            " covariance matrix, got " + std::to_string(cm.rows()) + "x" +
                            std::to_string(cm.cols()));
  }
  if (!cm.allFinite() || !is_symmetric(cm)) return false;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cm, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= 0.0) return false;

  if (modes == 1) {
    return std::sqrt(cm.determinant()) >= 0.5 - kPhysicalityTol;
  }
  // Williamson route: with cm = L L^T the antisymmetric L^T Omega L has
  // singular values equal to the symplectic eigenvalues. Unlike the quadratic
  // closed form this stays accurate when the spectrum is degenerate (pure states).
  const Eigen::LLT<Mat4> chol{Mat4(cm)};
  if (chol.info() != Eigen::Success) return false;
  const Mat4 l = chol.matrixL();
  const Mat4 m = l.transpose() * symplectic_form() * l;
  const Eigen::JacobiSVD<Mat4> svd(m);
  return svd.singularValues().minCoeff() >= 0.5 - kPhysicalityTol;
}

}  // namespace gaussmix

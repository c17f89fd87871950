#include "gaussmix/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gaussmix/errors.hpp"

namespace gaussmix {

namespace {

double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Determinant and discriminant of nu^4 - D nu^2 + det from the 2x2 blocks.
// Written this way the discriminant vanishes exactly for uncorrelated blocks
// instead of being the difference of two rounded squares.
struct Invariants {
  double d;
  double det;
  double disc;
};

Invariants block_invariants(const Mat4& cm) {
  const Mat2 a = cm.block<2, 2>(0, 0);
  const Mat2 b = cm.block<2, 2>(2, 2);
  const Mat2 c = cm.block<2, 2>(0, 2);
  Mat2 j;
  j << 0.0, 1.0, -1.0, 0.0;
  const double da = det2(a);
  const double db = det2(b);
  const double dc = det2(c);
  const double t = (a * j * c * j * b * j * c.transpose() * j).trace();
  const double gap = da - db;
  return {da + db + 2.0 * dc, da * db + dc * dc - t, gap * gap + 4.0 * dc * (da + db) + 4.0 * t};
}

}  // namespace

SymplecticSpectrum symplectic_eigenvalues(const Mat4& cm) {
  const auto [invariant, det, raw_disc] = block_invariants(cm);
  double disc = raw_disc;
  if (disc < -1e-10) {
    throw NumericError("negative discriminant " + std::to_string(disc) + " in symplectic spectrum");
  }
  disc = std::max(disc, 0.0);
  const double big = 0.5 * (invariant + std::sqrt(disc));
  if (!(big > 0.0) || !(det > 0.0)) {
    throw NumericError("covariance matrix has a non-positive symplectic spectrum");
  }
  // nu_-^2 nu_+^2 = det avoids cancellation in (D - sqrt(D^2 - 4 det)) / 2
  const double small = det / big;
  return {std::sqrt(small), std::sqrt(big)};
}

Mat4 partial_transpose(const TwoModeState& t) {
  Mat4 pt = t.cm;
  pt.row(3) *= -1.0;
  pt.col(3) *= -1.0;
  return pt;
}

EntanglementReport is_entangled(const TwoModeState& t) {
  const double lambda = symplectic_eigenvalues(partial_transpose(t)).nu_minus;
  return {lambda, lambda < 0.5 - kBoundaryTol, lambda - 0.5};
}

double proof_gamma(double r1, double r2, double mu1, double mu2, double tau) {
  const double detune = 1.0 - 2.0 * tau;
  return (mu1 * mu1 + mu2 * mu2) * detune * detune +
         8.0 * mu1 * mu2 * tau * (1.0 - tau) * std::cosh(2.0 * (r1 + r2));
}

double lambda_min_closed_form(double r1, double r2, double mu1, double mu2, double tau) {
  if (!(mu1 > 0.0 && mu1 <= 1.0 && mu2 > 0.0 && mu2 <= 1.0)) {
    throw InvalidParameter("purities must lie in (0, 1]");
  }
  if (r1 < 0.0 || r2 < 0.0) throw InvalidParameter("squeezing magnitudes must be >= 0");
  if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("coupling tau must lie in [0, 1]");

  const double gamma = proof_gamma(r1, r2, mu1, mu2, tau);
  const double c = 2.0 * mu1 * mu2;
  const double disc = gamma * gamma - c * c;
  if (disc < -1e-12) throw NumericError("gamma^2 < (2 mu1 mu2)^2: arguments out of range");
  // gamma - sqrt(gamma^2 - c^2) == c^2 / (gamma + sqrt(gamma^2 - c^2))
  const double diff = c * c / (gamma + std::sqrt(std::max(disc, 0.0)));
  return 0.5 * std::sqrt(diff) / (std::numbers::sqrt2 * mu1 * mu2);
}

}  // namespace gaussmix

#include "gaussmix/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gaussmix/entanglement.hpp"
#include "gaussmix/errors.hpp"

namespace gaussmix {

namespace {

// Purities computed from a covariance matrix can overshoot 1 by rounding.
double checked_purity(double mu) {
  if (!(mu > 0.0 && mu <= 1.0 + 1e-9)) {
    throw InvalidParameter("purity must lie in (0, 1], got " + std::to_string(mu));
  }
  return std::min(mu, 1.0);
}

void require_interacting(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw DomainError("threshold quantities need 0 < tau < 1 (no interaction at tau = " +
                      std::to_string(tau) + ")");
  }
}

double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

double displacement_factor(const SingleModeState& s1, const SingleModeState& s2) {
  const Mat2 sum = s1.cm + s2.cm;
  const double det = det2(sum);
  if (!(det > std::numeric_limits<double>::min()) || !std::isfinite(det)) {
    throw SingularMatrix("sigma1 + sigma2 is not invertible");
  }
  const Vec2 d = s1.mean - s2.mean;
  if (d.isZero(0.0)) return 1.0;
  Mat2 inv;
  inv << sum(1, 1), -sum(0, 1), -sum(1, 0), sum(0, 0);
  inv /= det;
  return std::exp(-0.5 * d.dot(inv * d));
}

FidelityBreakdown gaussian_fidelity(const SingleModeState& s1, const SingleModeState& s2) {
  FidelityBreakdown out;
  out.delta_cap = det2(s1.cm + s2.cm);
  out.gamma_factor = displacement_factor(s1, s2);
  out.mean_diff = s1.mean - s2.mean;
  const double excess1 = std::max(det2(s1.cm) - 0.25, 0.0);
  const double excess2 = std::max(det2(s2.cm) - 0.25, 0.0);
  out.delta_small = 4.0 * excess1 * excess2;
  // 1 / (sqrt(D + d) - sqrt(d)) == (sqrt(D + d) + sqrt(d)) / D
  const double root_sum = std::sqrt(out.delta_cap + out.delta_small) + std::sqrt(out.delta_small);
  out.fidelity = out.gamma_factor * root_sum / out.delta_cap;
  return out;
}

double coupling_function(double mu1, double mu2, double tau) {
  require_interacting(tau);
  mu1 = checked_purity(mu1);
  mu2 = checked_purity(mu2);
  const double detune = 1.0 - 2.0 * tau;
  const double num = 1.0 + mu1 * mu1 * mu2 * mu2 - (mu1 * mu1 + mu2 * mu2) * detune * detune;
  return num / (8.0 * mu1 * mu2 * tau * (1.0 - tau));
}

PsiThreshold psi_threshold(double r1, double r2, double mu1, double mu2, double tau) {
  if (r1 < 0.0 || r2 < 0.0) throw InvalidParameter("squeezing magnitudes must be >= 0");
  const double f = coupling_function(mu1, mu2, tau);
  const double num = std::cosh(2.0 * r1) * std::cosh(2.0 * r2) - f;
  const double den = std::sinh(2.0 * r1) * std::sinh(2.0 * r2);

  PsiThreshold out;
  if (den == 0.0) {
    out.degenerate = true;
    // A zero numerator sits exactly on the boundary, which is separable.
    out.argument = num > 0.0 ? std::numeric_limits<double>::infinity()
                             : -std::numeric_limits<double>::infinity();
  } else {
    out.argument = num / den;
  }
  if (out.argument > 1.0) {
    out.kind = PsiThreshold::Kind::kAlwaysEntangled;
  } else if (out.argument < -1.0) {
    out.kind = PsiThreshold::Kind::kNeverEntangled;
  } else {
    out.kind = PsiThreshold::Kind::kCrossing;
    out.psi_e = std::acos(out.argument);
  }
  return out;
}

ThresholdReport fidelity_threshold(double mu1, double mu2, double tau) {
  require_interacting(tau);
  mu1 = checked_purity(mu1);
  mu2 = checked_purity(mu2);

  ThresholdReport rep;
  rep.g_minus = (1.0 - mu1 * mu1) * (1.0 - mu2 * mu2);
  rep.g_plus = (1.0 + mu1 * mu1) * (1.0 + mu2 * mu2);
  rep.f_coupling = coupling_function(mu1, mu2, tau);
  const double x = 4.0 * tau * (1.0 - tau);
  rep.f_e = 4.0 * mu1 * mu2 * std::sqrt(tau * (1.0 - tau)) /
            (std::sqrt(rep.g_minus + x * rep.g_plus) - std::sqrt(x * rep.g_minus));
  return rep;
}

ThresholdReport threshold_report(double r1, double r2, double mu1, double mu2, double tau) {
  ThresholdReport rep = fidelity_threshold(mu1, mu2, tau);
  mu1 = checked_purity(mu1);
  mu2 = checked_purity(mu2);
  rep.psi = psi_threshold(r1, r2, mu1, mu2, tau);
  rep.f_min = fidelity_min_over_psi(r1, r2, mu1, mu2);
  rep.lambda_min = lambda_min_closed_form(r1, r2, mu1, mu2, tau);
  rep.gamma_proof = proof_gamma(r1, r2, mu1, mu2, tau);
  return rep;
}

double fidelity_min_over_psi(double r1, double r2, double mu1, double mu2) {
  if (r1 < 0.0 || r2 < 0.0) throw InvalidParameter("squeezing magnitudes must be >= 0");
  mu1 = checked_purity(mu1);
  mu2 = checked_purity(mu2);
  const double p = mu1 * mu2;
  const double g_minus = (1.0 - mu1 * mu1) * (1.0 - mu2 * mu2);
  return 2.0 * p / (std::sqrt(1.0 + p * p + 2.0 * p * std::cosh(2.0 * (r1 + r2))) - std::sqrt(g_minus));
}

double displaced_threshold(const SingleModeState& s1, const SingleModeState& s2, double tau) {
  const double gamma = displacement_factor(s1, s2);
  return gamma * fidelity_threshold(purity(s1), purity(s2), tau).f_e;
}

}  // namespace gaussmix

#pragma once

// Uhlmann fidelity between single-mode Gaussian states and the threshold
// quantities that decide whether mixing two states entangles them.
//
// Throughout, (r1, 0) and (r2, psi) are the squeezings of the two inputs:
// psi is the phase of input 2 relative to input 1.

#include <optional>

#include "gaussmix/gaussian.hpp"

namespace gaussmix {

struct FidelityBreakdown {
  double fidelity = 1.0;
  double delta_cap = 1.0;    ///< Delta = det(s1 + s2)
  double delta_small = 0.0;  ///< delta = 4 prod_k (det s_k - 1/4)
  double gamma_factor = 1.0; ///< Gamma = exp[-1/2 X12^T (s1 + s2)^-1 X12]
  Vec2 mean_diff = Vec2::Zero();
};

/// F = Gamma / (sqrt(Delta + delta) - sqrt(delta)).
/// Throws SingularMatrix if s1 + s2 is not invertible.
FidelityBreakdown gaussian_fidelity(const SingleModeState& s1, const SingleModeState& s2);

/// Gamma factor alone, for displaced inputs.
double displacement_factor(const SingleModeState& s1, const SingleModeState& s2);

/// f = [1 + mu1^2 mu2^2 - (mu1^2 + mu2^2)(1 - 2 tau)^2] / [8 mu1 mu2 tau (1 - tau)].
/// Throws DomainError unless 0 < tau < 1 and mu_k in (0, 1].
double coupling_function(double mu1, double mu2, double tau);

/// Outcome of solving cos(psi_e) = [cosh 2r1 cosh 2r2 - f] / [sinh 2r1 sinh 2r2].
/// The output is entangled exactly for psi in (psi_e, 2 pi - psi_e).
struct PsiThreshold {
  enum class Kind {
    kCrossing,         ///< argument in [-1, 1]; psi_e is set
    kAlwaysEntangled,  ///< argument > 1: every psi entangles
    kNeverEntangled,   ///< argument < -1: no psi entangles
  };
  Kind kind = Kind::kNeverEntangled;
  std::optional<double> psi_e;
  /// arccos argument; +-infinity when a squeezing is zero (sign of the numerator).
  double argument = 0.0;
  /// r1 == 0 or r2 == 0: the phase is immaterial and the verdict comes from
  /// the sign of cosh 2r1 cosh 2r2 - f alone.
  bool degenerate = false;
};

/// Throws DomainError as coupling_function, InvalidParameter for r < 0.
PsiThreshold psi_threshold(double r1, double r2, double mu1, double mu2, double tau);

struct ThresholdReport {
  double f_e = 1.0;
  double f_coupling = 0.0;
  double g_minus = 0.0;  ///< prod_k (1 - mu_k^2)
  double g_plus = 0.0;   ///< prod_k (1 + mu_k^2)
  // The remaining fields depend on the squeezings; fidelity_threshold leaves
  // them empty and threshold_report fills them.
  std::optional<PsiThreshold> psi;
  std::optional<double> f_min;
  std::optional<double> lambda_min;
  std::optional<double> gamma_proof;
};

/// F_e = 4 mu1 mu2 sqrt(tau (1 - tau)) /
///       [sqrt(g- + 4 tau (1 - tau) g+) - sqrt(4 tau (1 - tau) g-)]
/// Depends on purities and coupling only. Throws DomainError at tau in {0, 1}.
ThresholdReport fidelity_threshold(double mu1, double mu2, double tau);

/// fidelity_threshold plus psi_e, F_min, lambda_min and gamma for given squeezings.
ThresholdReport threshold_report(double r1, double r2, double mu1, double mu2, double tau);

/// F_min = 2 mu1 mu2 / [sqrt(1 + mu1^2 mu2^2 + 2 mu1 mu2 cosh 2(r1 + r2)) - sqrt(g-)],
/// the fidelity of zero-mean inputs at psi = pi.
double fidelity_min_over_psi(double r1, double r2, double mu1, double mu2);

/// Gamma(X1, X2) F_e(mu1, mu2; tau): the threshold for displaced inputs.
double displaced_threshold(const SingleModeState& s1, const SingleModeState& s2, double tau);

}  // namespace gaussmix

#pragma once

#include "gaussmix/gaussian.hpp"

namespace gaussmix {

/// Width of the band below 1/2 that still counts as separable. The
/// separability criterion is a strict inequality, so ties go to "separable".
inline constexpr double kBoundaryTol = 1e-9;

struct SymplecticSpectrum {
  double nu_minus = 0.0;
  double nu_plus = 0.0;
};

struct EntanglementReport {
  double lambda_tilde = 0.0;  ///< smallest symplectic eigenvalue of the partial transpose
  bool entangled = false;
  double margin = 0.0;        ///< lambda_tilde - 1/2
};

/// Two-mode symplectic spectrum from the block invariants
///   D = det A + det B + 2 det C,  nu^2 = (D -+ sqrt(D^2 - 4 det cm)) / 2
/// for cm = [[A, C], [C^T, B]]. Throws NumericError if the discriminant is
/// below -1e-10 or the spectrum is not positive.
SymplecticSpectrum symplectic_eigenvalues(const Mat4& cm);

/// Lambda cm Lambda with Lambda = diag(1, 1, 1, -1): mode 2 momentum flip.
Mat4 partial_transpose(const TwoModeState& t);

/// Simon test: entangled iff lambda_tilde < 1/2 - kBoundaryTol.
EntanglementReport is_entangled(const TwoModeState& t);

/// gamma = (mu1^2 + mu2^2)(1 - 2 tau)^2 + 8 mu1 mu2 tau (1 - tau) cosh[2 (r1 + r2)]
double proof_gamma(double r1, double r2, double mu1, double mu2, double tau);

/// Minimum over the relative squeezing phase (attained at psi = pi) of
/// lambda_tilde for the mixed output:
///   (1/2) sqrt(gamma - sqrt(gamma^2 - (2 mu1 mu2)^2)) / (sqrt(2) mu1 mu2)
double lambda_min_closed_form(double r1, double r2, double mu1, double mu2, double tau);

}  // namespace gaussmix

#pragma once

// Bilinear exchange evolution U_g(t) = exp(-i g t (a^dag b + a b^dag)) in
// phase space. The mode transformation is the real orthogonal mixing
//   a -> sqrt(tau) a + sqrt(1 - tau) b,   b -> -sqrt(1 - tau) a + sqrt(tau) b,
// with tau = cos^2(g t). Other beam-splitter phase conventions differ by a
// local phase rotation of mode 2, which leaves every entanglement verdict
// unchanged.

#include "gaussmix/gaussian.hpp"

namespace gaussmix {

class CouplingSpec {
 public:
  /// Throws DomainError unless 0 <= tau <= 1.
  static CouplingSpec from_tau(double tau);
  /// tau = cos^2(g t).
  static CouplingSpec from_rate(double g, double t);

  [[nodiscard]] double tau() const { return tau_; }
  /// tau strictly inside (0, 1): the modes actually exchange excitations.
  [[nodiscard]] bool interacting() const { return tau_ > 0.0 && tau_ < 1.0; }

 private:
  explicit CouplingSpec(double tau) : tau_(tau) {}
  double tau_;
};

/// 4x4 symplectic matrix S acting on (q1, p1, q2, p2).
Mat4 exchange_matrix(double tau);

/// Output of the exchange interaction for uncorrelated inputs:
///   Sigma1  = tau s1 + (1 - tau) s2
///   Sigma2  = tau s2 + (1 - tau) s1
///   Sigma12 = sqrt(tau (1 - tau)) (s2 - s1)
TwoModeState mix(const SingleModeState& s1, const SingleModeState& s2, const CouplingSpec& c);

/// Reduced single-mode state of mode `keep` (1 or 2).
SingleModeState reduce(const TwoModeState& t, int keep);

}  // namespace gaussmix

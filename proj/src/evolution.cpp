#include "gaussmix/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussmix/errors.hpp"

namespace gaussmix {

CouplingSpec CouplingSpec::from_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw DomainError("coupling tau must lie in [0, 1], got " + std::to_string(tau));
  }
  return CouplingSpec(tau);
}

CouplingSpec CouplingSpec::from_rate(double g, double t) {
  if (!std::isfinite(g) || !std::isfinite(t)) throw DomainError("coupling rate and time must be finite");
  const double c = std::cos(g * t);
  // c*c can exceed 1 by an ulp only if cos did; clamp that single rounding case
  return CouplingSpec(std::min(1.0, c * c));
}

Mat4 exchange_matrix(double tau) {
  const double t = std::sqrt(tau);
  const double s = std::sqrt(1.0 - tau);
  const Mat2 id = Mat2::Identity();
  Mat4 m;
  m << t * id, s * id,
      -s * id, t * id;
  return m;
}

TwoModeState mix(const SingleModeState& s1, const SingleModeState& s2, const CouplingSpec& c) {
  const double tau = c.tau();
  const double t = std::sqrt(tau);
  const double s = std::sqrt(1.0 - tau);

  TwoModeState out;
  out.mean.head<2>() = t * s1.mean + s * s2.mean;
  out.mean.tail<2>() = -s * s1.mean + t * s2.mean;

  const Mat2 cross = std::sqrt(tau * (1.0 - tau)) * (s2.cm - s1.cm);
  out.cm.block<2, 2>(0, 0) = tau * s1.cm + (1.0 - tau) * s2.cm;
  out.cm.block<2, 2>(2, 2) = tau * s2.cm + (1.0 - tau) * s1.cm;
  out.cm.block<2, 2>(0, 2) = cross;
  out.cm.block<2, 2>(2, 0) = cross.transpose();
  return out;
}

SingleModeState reduce(const TwoModeState& t, int keep) {
  if (keep != 1 && keep != 2) throw InvalidParameter("mode index must be 1 or 2, got " + std::to_string(keep));
  const int offset = 2 * (keep - 1);
  SingleModeState s;
  s.mean = t.mean.segment<2>(offset);
  s.cm = t.cm.block<2, 2>(offset, offset);
  return s;
}

}  // namespace gaussmix

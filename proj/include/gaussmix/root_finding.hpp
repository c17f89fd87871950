#pragma once

#include <cmath>
#include <optional>

namespace gaussmix {

/// Bisection for a sign change of `f` on [lo, hi]. Returns std::nullopt if
/// f(lo) and f(hi) do not bracket a root. Stops when the bracket is shorter
/// than `tol` or f hits exactly zero; returns the bracket midpoint.
template <class F>
std::optional<double> bisect(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 200) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) return std::nullopt;
  for (int i = 0; i < max_iter && hi - lo >= tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gaussmix

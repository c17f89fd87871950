#pragma once

// Randomized and grid-based certification of the fidelity/entanglement
// equivalence. The fidelity verdict (F < threshold) and the Simon verdict
// (lambda_tilde < 1/2) are computed along disjoint code paths that share
// only state_from_params, so agreement between them is evidence.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gaussmix/gaussian.hpp"

namespace gaussmix {

/// Samples with |F - threshold| < kFidelityBand * F_e are not counted.
inline constexpr double kFidelityBand = 1e-7;
/// Samples with |lambda_tilde - 1/2| < kLambdaBand are not counted.
inline constexpr double kLambdaBand = 1e-9;
/// Allowed difference between lambda_tilde with and without first moments.
inline constexpr double kMeanInvarianceTol = 1e-12;

struct SweepSample {
  GaussianParams params1;
  GaussianParams params2;
  double tau = 0.0;
  double fidelity = 1.0;
  /// F_e or Gamma F_e; empty when tau is 0 or 1 (no interaction).
  std::optional<double> threshold;
  double lambda_tilde = 0.5;
  bool verdict_fidelity = false;
  bool verdict_simon = false;
  bool boundary_excluded = false;
  /// |lambda_tilde(with means) - lambda_tilde(zero means)|; corollary checks only.
  double mean_invariance_error = 0.0;

  [[nodiscard]] bool no_interaction() const { return !threshold.has_value(); }
  [[nodiscard]] bool disagrees() const {
    return !boundary_excluded && verdict_fidelity != verdict_simon;
  }
};

/// Zero-mean inputs. Inputs with displacement are routed to check_corollary.
/// Throws DomainError for tau outside [0, 1]; tau in {0, 1} gives false/false.
SweepSample check_theorem(const GaussianParams& p1, const GaussianParams& p2, double tau);

/// Threshold Gamma(X1, X2) F_e. Throws NumericError if lambda_tilde depends
/// on the first moments beyond kMeanInvarianceTol.
SweepSample check_corollary(const GaussianParams& p1, const GaussianParams& p2, double tau);

/// F(rho_h, rho~_k) in the order (h, k) = 11, 12, 21, 22, where rho~_k is
/// the reduced output state of mode k.
using IoQuad = std::array<double, 4>;
IoQuad io_fidelities(const GaussianParams& p1, const GaussianParams& p2, double tau);

struct IoFidelityReport {
  enum class Status {
    kFound,
    kNeverEntangled,   ///< lambda_tilde >= 1/2 at the relative phase pi
    kAlwaysEntangled,  ///< lambda_tilde < 1/2 already at relative phase 0
    kNoInteraction,    ///< tau in {0, 1}
  };
  Status status = Status::kNoInteraction;
  IoQuad fidelities{};  ///< at the given parameters
  std::optional<IoQuad> thresholds;
  /// Relative phase psi2 - psi1 in [0, pi] where lambda_tilde crosses 1/2.
  std::optional<double> psi_e_numeric;
  /// Per channel: (F < threshold) <=> (lambda_tilde < 1/2) at every checked
  /// grid point outside the boundary band. All false when no threshold.
  std::array<bool, 4> sign_equivalent{};
  int grid_points = 0;
};

/// Input-output thresholds recovered numerically: bisection of
/// lambda_tilde(phi) - 1/2 over the relative phase phi in [0, pi] to
/// 1e-12, then the four io-fidelities evaluated there. Sign-equivalence is
/// checked on a uniform phi grid over [0, 2 pi] with `grid_points` points.
IoFidelityReport io_fidelity_thresholds(const GaussianParams& p1, const GaussianParams& p2,
                                        double tau, int grid_points = 1000);

/// n points from `from` to `to` inclusive. Throws InvalidParameter for n < 2.
std::vector<double> uniform_grid(double from, double to, int n);

/// Samples with params2.psi on a uniform grid over [0, 2 pi]; each sample
/// goes through check_theorem (or check_corollary for displaced inputs).
std::vector<SweepSample> sweep_psi(const GaussianParams& p1, const GaussianParams& p2, double tau,
                                   int n_points);

struct SamplingRanges {
  double r_max = 2.0;
  double n_max = 2.0;
  double alpha_max = 2.0;
};

/// Deterministic parameter generator. Doubles are built from raw
/// mt19937_64 output so a seed reproduces the same draws on any platform.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed, SamplingRanges ranges = {});

  /// Uniform in [0, 1).
  double uniform();
  /// r in [0, r_max], psi in [0, 2 pi), N in [0, n_max], alpha = 0.
  GaussianParams draw_zero_mean();
  /// Uniform displacement in the disk |alpha| <= alpha_max.
  GaussianParams with_random_mean(GaussianParams p);
  /// Uniform in the open interval (0, 1).
  double draw_tau();

 private:
  std::mt19937_64 engine_;
  SamplingRanges ranges_;
};

struct CertifyRecord {
  std::uint64_t index = 0;
  bool corollary = false;
  SweepSample sample;
};

struct CertifySummary {
  std::uint64_t samples = 0;
  std::uint64_t checks = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t boundary_excluded_count = 0;
  /// Largest |lambda_tilde - 1/2| among disagreeing checks; 0 when none.
  double max_margin_violation = 0.0;
  double max_mean_invariance_error = 0.0;
};

struct CertifyOptions {
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  bool theorem = true;
  bool corollary = true;
  SamplingRanges ranges;
  /// Called once per check, in draw order.
  std::function<void(const CertifyRecord&)> on_record;
  /// Replaces the random pair for sample i (used to force specific draws).
  std::function<std::pair<GaussianParams, GaussianParams>(std::uint64_t, ParamSampler&)> draw_pair;
};

/// For each sample: a zero-mean pair and tau are drawn and checked against
/// the theorem; the same pair with random first moments is then checked
/// against the corollary.
CertifySummary certify(const CertifyOptions& options);

}  // namespace gaussmix

#include "gaussmix/verify.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaussmix/entanglement.hpp"
#include "gaussmix/errors.hpp"
#include "gaussmix/evolution.hpp"
#include "gaussmix/fidelity.hpp"
#include "gaussmix/root_finding.hpp"

namespace gaussmix {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GaussianParams without_mean(GaussianParams p) {
  p.alpha_re = 0.0;
  p.alpha_im = 0.0;
  return p;
}

GaussianParams with_phase(GaussianParams p, double psi) {
  p.psi = psi;
  return p;
}

double simon_lambda(const SingleModeState& s1, const SingleModeState& s2, const CouplingSpec& c) {
  return is_entangled(mix(s1, s2, c)).lambda_tilde;
}

bool in_band(double fidelity, double threshold, double reference, double lambda) {
  return std::abs(fidelity - threshold) < kFidelityBand * reference ||
         std::abs(lambda - 0.5) < kLambdaBand;
}

SweepSample evaluate(const GaussianParams& p1, const GaussianParams& p2, double tau, bool displaced) {
  const CouplingSpec coupling = CouplingSpec::from_tau(tau);
  SweepSample out;
  out.params1 = validated(p1);
  out.params2 = validated(p2);
  out.tau = tau;

  const SingleModeState s1 = state_from_params(out.params1);
  const SingleModeState s2 = state_from_params(out.params2);

  // Fidelity chain: never looks at the output covariance matrix.
  out.fidelity = gaussian_fidelity(s1, s2).fidelity;
  double f_e = 0.0;
  if (coupling.interacting()) {
    f_e = fidelity_threshold(out.params1.purity(), out.params2.purity(), tau).f_e;
    out.threshold = displaced ? displaced_threshold(s1, s2, tau) : f_e;
    out.verdict_fidelity = out.fidelity < *out.threshold;
  }

  // Simon chain: never looks at the fidelity.
  const EntanglementReport simon = is_entangled(mix(s1, s2, coupling));
  out.lambda_tilde = simon.lambda_tilde;
  out.verdict_simon = coupling.interacting() && simon.entangled;

  if (displaced) {
    const double centred = simon_lambda(state_from_params(without_mean(out.params1)),
                                        state_from_params(without_mean(out.params2)), coupling);
    out.mean_invariance_error = std::abs(centred - out.lambda_tilde);
    if (out.mean_invariance_error > kMeanInvarianceTol) {
      throw NumericError("lambda_tilde changed by " + std::to_string(out.mean_invariance_error) +
                         " when first moments were removed");
    }
  }

  out.boundary_excluded = out.threshold && in_band(out.fidelity, *out.threshold, f_e, out.lambda_tilde);
  return out;
}

}  // namespace

SweepSample check_theorem(const GaussianParams& p1, const GaussianParams& p2, double tau) {
  if (p1.has_displacement() || p2.has_displacement()) return check_corollary(p1, p2, tau);
  return evaluate(p1, p2, tau, false);
}

SweepSample check_corollary(const GaussianParams& p1, const GaussianParams& p2, double tau) {
  return evaluate(p1, p2, tau, true);
}

IoQuad io_fidelities(const GaussianParams& p1, const GaussianParams& p2, double tau) {
  const SingleModeState s1 = state_from_params(p1);
  const SingleModeState s2 = state_from_params(p2);
  const TwoModeState out = mix(s1, s2, CouplingSpec::from_tau(tau));
  const SingleModeState o1 = reduce(out, 1);
  const SingleModeState o2 = reduce(out, 2);
  return {gaussian_fidelity(s1, o1).fidelity, gaussian_fidelity(s1, o2).fidelity,
          gaussian_fidelity(s2, o1).fidelity, gaussian_fidelity(s2, o2).fidelity};
}

IoFidelityReport io_fidelity_thresholds(const GaussianParams& p1, const GaussianParams& p2, double tau,
                                        int grid_points) {
  const CouplingSpec coupling = CouplingSpec::from_tau(tau);
  IoFidelityReport rep;
  rep.fidelities = io_fidelities(p1, p2, tau);
  if (!coupling.interacting()) {
    rep.status = IoFidelityReport::Status::kNoInteraction;
    return rep;
  }

  const SingleModeState s1 = state_from_params(p1);
  auto at_phase = [&](double phi) { return with_phase(p2, p1.psi + phi); };
  auto lambda_at = [&](double phi) { return simon_lambda(s1, state_from_params(at_phase(phi)), coupling); };

  if (lambda_at(std::numbers::pi) >= 0.5 - kBoundaryTol) {
    rep.status = IoFidelityReport::Status::kNeverEntangled;
    return rep;
  }
  if (lambda_at(0.0) < 0.5 - kBoundaryTol) {
    rep.status = IoFidelityReport::Status::kAlwaysEntangled;
    return rep;
  }

  // lambda(0) can sit inside the tolerance band just below 1/2, in which
  // case there is no sign change and the crossing is at phase 0.
  const double psi_e = bisect([&](double phi) { return lambda_at(phi) - 0.5; }, 0.0, std::numbers::pi, 1e-12)
                           .value_or(0.0);
  rep.status = IoFidelityReport::Status::kFound;
  rep.psi_e_numeric = psi_e;
  rep.thresholds = io_fidelities(p1, at_phase(psi_e), tau);

  rep.grid_points = grid_points;
  rep.sign_equivalent.fill(true);
  for (double phi : uniform_grid(0.0, kTwoPi, grid_points)) {
    const double lambda = lambda_at(phi);
    if (std::abs(lambda - 0.5) < kLambdaBand) continue;
    const bool entangled = lambda < 0.5;
    const IoQuad f = io_fidelities(p1, at_phase(phi), tau);
    for (std::size_t k = 0; k < f.size(); ++k) {
      const double thr = (*rep.thresholds)[k];
      if (std::abs(f[k] - thr) < kFidelityBand * thr) continue;
      if ((f[k] < thr) != entangled) rep.sign_equivalent[k] = false;
    }
  }
  return rep;
}

std::vector<double> uniform_grid(double from, double to, int n) {
  if (n < 2) throw InvalidParameter("a grid needs at least 2 points, got " + std::to_string(n));
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double step = (to - from) / (n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = from + step * i;
  grid.back() = to;
  return grid;
}

std::vector<SweepSample> sweep_psi(const GaussianParams& p1, const GaussianParams& p2, double tau, int n_points) {
  std::vector<SweepSample> out;
  out.reserve(static_cast<std::size_t>(std::max(n_points, 0)));
  for (double psi : uniform_grid(0.0, kTwoPi, n_points)) {
    out.push_back(check_theorem(p1, with_phase(p2, psi), tau));
  }
  return out;
}

ParamSampler::ParamSampler(std::uint64_t seed, SamplingRanges ranges) : engine_(seed), ranges_(ranges) {}

double ParamSampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

GaussianParams ParamSampler::draw_zero_mean() {
  GaussianParams p;
  p.r = ranges_.r_max * uniform();
  p.psi = kTwoPi * uniform();
  p.n_th = ranges_.n_max * uniform();
  return p;
}

GaussianParams ParamSampler::with_random_mean(GaussianParams p) {
  const double radius = ranges_.alpha_max * std::sqrt(uniform());
  const double angle = kTwoPi * uniform();
  p.alpha_re = radius * std::cos(angle);
  p.alpha_im = radius * std::sin(angle);
  return p;
}

double ParamSampler::draw_tau() {
  double tau = 0.0;
  while (tau == 0.0) tau = uniform();
  return tau;
}

CertifySummary certify(const CertifyOptions& options) {
  ParamSampler sampler(options.seed, options.ranges);
  CertifySummary summary;
  summary.samples = options.samples;

  auto record = [&](std::uint64_t index, bool corollary, const SweepSample& s) {
    ++summary.checks;
    if (s.boundary_excluded) ++summary.boundary_excluded_count;
    if (s.disagrees()) {
      ++summary.disagreements;
      summary.max_margin_violation = std::max(summary.max_margin_violation, std::abs(s.lambda_tilde - 0.5));
    }
    summary.max_mean_invariance_error = std::max(summary.max_mean_invariance_error, s.mean_invariance_error);
    if (options.on_record) options.on_record({index, corollary, s});
  };

  for (std::uint64_t i = 0; i < options.samples; ++i) {
    auto [p1, p2] = options.draw_pair ? options.draw_pair(i, sampler)
                                      : std::pair{sampler.draw_zero_mean(), sampler.draw_zero_mean()};
    const double tau = sampler.draw_tau();
    if (options.theorem) record(i, false, check_theorem(without_mean(p1), without_mean(p2), tau));
    if (options.corollary) {
      const GaussianParams d1 = sampler.with_random_mean(p1);
      const GaussianParams d2 = sampler.with_random_mean(p2);
      record(i, true, check_corollary(d1, d2, tau));
    }
  }
  return summary;
}

}  // namespace gaussmix

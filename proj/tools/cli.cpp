#include "cli.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gaussmix/errors.hpp"
#include "gaussmix/evolution.hpp"
#include "gaussmix/fidelity.hpp"
#include "gaussmix/verify.hpp"
#include "scenario.hpp"

namespace gaussmix::cli {

namespace {

using nlohmann::json;

constexpr double kSoftSqueezingBound = 5.0;
constexpr int kDefaultIoGrid = 1000;

class OutputError : public std::runtime_error {
 public:
  explicit OutputError(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
  std::string scenario;
  std::string out;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  int points = 0;
  double tau = 0.0;
  bool quiet = false;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  const Options& opts;
  const CLI::App& sub;

  [[nodiscard]] bool given(const std::string& flag) const { return sub.count(flag) > 0; }
  void warn(const std::string& msg) const {
    if (!opts.quiet) err << "warning: " << msg << '\n';
  }
};

const char* io_status_name(IoFidelityReport::Status s) {
  switch (s) {
    case IoFidelityReport::Status::kFound: return "found";
    case IoFidelityReport::Status::kNeverEntangled: return "never-entangled";
    case IoFidelityReport::Status::kAlwaysEntangled: return "always-entangled";
    case IoFidelityReport::Status::kNoInteraction: return "no-interaction";
  }
  return "no-interaction";
}

json io_report_json(const IoFidelityReport& rep) {
  json j;
  j["status"] = io_status_name(rep.status);
  j["psi_e_numeric"] = rep.psi_e_numeric ? json(*rep.psi_e_numeric) : json(nullptr);
  j["fidelities"] = rep.fidelities;
  j["thresholds"] = rep.thresholds ? json(*rep.thresholds) : json(nullptr);
  j["sign_equivalent"] = rep.sign_equivalent;
  j["grid_points"] = rep.grid_points;
  return j;
}

Scenario load(const Context& ctx) {
  Scenario sc = load_scenario(ctx.opts.scenario);
  if (ctx.given("--tau")) sc.tau = ctx.opts.tau;
  if (ctx.given("--points")) {
    if (ctx.opts.points < 2) throw ScenarioError("--points must be >= 2");
    if (sc.sweep) sc.sweep->points = ctx.opts.points;
  }
  for (const GaussianParams* p : {&sc.state1, &sc.state2}) {
    if (p->r > kSoftSqueezingBound) {
      ctx.warn("squeezing r = " + format_number(p->r) + " exceeds 5; closed forms may lose precision");
    }
  }
  return sc;
}

SweepSample evaluate(const Scenario& sc, const GaussianParams& p2, double tau) {
  return sc.mode == Mode::kCorollary ? check_corollary(sc.state1, p2, tau) : check_theorem(sc.state1, p2, tau);
}

std::ofstream open_output(const std::string& path) {
  if (path.empty()) throw ScenarioError("--out <path> is required");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw OutputError("cannot write to '" + path + "'");
  return f;
}

void finish_output(std::ofstream& f, const std::string& text, const std::string& path) {
  f << text;
  f.flush();
  if (!f) throw OutputError("failed writing '" + path + "'");
}

int cmd_check(const Context& ctx) {
  const Scenario sc = load(ctx);
  const SweepSample s = evaluate(sc, sc.state2, sc.tau);

  json j;
  j["mode"] = mode_name(sc.mode);
  j["status"] = s.no_interaction() ? "no-interaction" : "interacting";
  j["fidelity"] = s.fidelity;
  j["threshold"] = s.threshold ? json(*s.threshold) : json(nullptr);
  j["lambda_tilde"] = s.lambda_tilde;
  j["entangled"] = s.verdict_simon;
  j["fidelity_below_threshold"] = s.verdict_fidelity;
  j["margin"] = s.lambda_tilde - 0.5;
  j["boundary_excluded"] = s.boundary_excluded;
  if (sc.mode == Mode::kIoFidelity) {
    const int grid = ctx.given("--points") ? ctx.opts.points : kDefaultIoGrid;
    j["io"] = io_report_json(io_fidelity_thresholds(sc.state1, sc.state2, sc.tau, grid));
  }
  ctx.out << j.dump(2) << '\n';
  return kOk;
}

int cmd_sweep(const Context& ctx, std::optional<Mode> preset) {
  Scenario sc = load(ctx);
  if (preset) sc.mode = *preset;
  if (!sc.sweep) throw ScenarioError("scenario has no sweep block");
  std::ofstream file = open_output(ctx.opts.out);

  const bool io = sc.mode == Mode::kIoFidelity;
  const SweepSpec& spec = *sc.sweep;
  std::ostringstream csv;
  csv << "psi,tau,fidelity,threshold,lambda_tilde,entangled";
  if (io) csv << ",f_io_11,f_io_12,f_io_21,f_io_22";
  csv << '\n';

  for (double x : uniform_grid(spec.from, spec.to, spec.points)) {
    GaussianParams p2 = sc.state2;
    double tau = sc.tau;
    if (spec.variable == SweepSpec::Variable::kPsi) {
      p2.psi = x;
    } else {
      tau = x;
    }
    const SweepSample s = evaluate(sc, p2, tau);
    csv << format_number(p2.psi) << ',' << format_number(tau) << ',' << format_number(s.fidelity) << ','
        << (s.threshold ? format_number(*s.threshold) : "") << ',' << format_number(s.lambda_tilde) << ','
        << (s.verdict_simon ? "true" : "false");
    if (io) {
      for (double f : io_fidelities(sc.state1, p2, tau)) csv << ',' << format_number(f);
    }
    csv << '\n';
  }
  finish_output(file, csv.str(), ctx.opts.out);

  json summary;
  summary["mode"] = mode_name(sc.mode);
  summary["rows"] = spec.points;
  summary["out"] = ctx.opts.out;
  const bool fixed_tau = spec.variable == SweepSpec::Variable::kPsi;
  if (fixed_tau && CouplingSpec::from_tau(sc.tau).interacting() && sc.mode == Mode::kTheorem &&
      !sc.state1.has_displacement() && !sc.state2.has_displacement()) {
    summary["threshold"] = fidelity_threshold(sc.state1.purity(), sc.state2.purity(), sc.tau).f_e;
  }
  if (io && fixed_tau) summary["io"] = io_report_json(io_fidelity_thresholds(sc.state1, sc.state2, sc.tau, spec.points));
  ctx.out << summary.dump(2) << '\n';
  return kOk;
}

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ScenarioError(source + " is not a valid unsigned 64-bit seed: '" + text + "'");
  }
  return v;
}

int cmd_certify(const Context& ctx) {
  if (ctx.opts.samples < 1) throw ScenarioError("--samples must be >= 1");

  std::uint64_t seed = kDefaultSeed;
  if (const char* env = std::getenv(kSeedEnvVar)) seed = parse_seed(env, kSeedEnvVar);
  if (!ctx.opts.scenario.empty()) {
    const Scenario sc = load_scenario(ctx.opts.scenario);
    if (sc.seed) seed = *sc.seed;
  }
  if (ctx.given("--seed")) seed = ctx.opts.seed;

  std::ofstream file;
  std::ostringstream csv;
  const bool write_csv = !ctx.opts.out.empty();
  if (write_csv) {
    file = open_output(ctx.opts.out);
    csv << "index,check,r1,psi1,n_th1,alpha1_re,alpha1_im,r2,psi2,n_th2,alpha2_re,alpha2_im,"
           "tau,fidelity,threshold,lambda_tilde,verdict_fidelity,verdict_simon,boundary_excluded\n";
  }

  CertifyOptions options;
  options.samples = ctx.opts.samples;
  options.seed = seed;
  if (write_csv) {
    options.on_record = [&csv](const CertifyRecord& rec) {
      const SweepSample& s = rec.sample;
      auto params = [&csv](const GaussianParams& p) {
        csv << format_number(p.r) << ',' << format_number(p.psi) << ',' << format_number(p.n_th) << ','
            << format_number(p.alpha_re) << ',' << format_number(p.alpha_im) << ',';
      };
      csv << rec.index << ',' << (rec.corollary ? "corollary" : "theorem") << ',';
      params(s.params1);
      params(s.params2);
      csv << format_number(s.tau) << ',' << format_number(s.fidelity) << ','
          << (s.threshold ? format_number(*s.threshold) : "") << ',' << format_number(s.lambda_tilde) << ','
          << (s.verdict_fidelity ? "true" : "false") << ',' << (s.verdict_simon ? "true" : "false") << ','
          << (s.boundary_excluded ? "true" : "false") << '\n';
    };
  }
  const CertifySummary summary = certify(options);
  if (write_csv) finish_output(file, csv.str(), ctx.opts.out);

  json j;
  j["seed"] = seed;
  j["samples"] = summary.samples;
  j["checks"] = summary.checks;
  j["disagreements"] = summary.disagreements;
  j["boundary_excluded_count"] = summary.boundary_excluded_count;
  j["max_margin_violation"] = summary.max_margin_violation;
  j["max_mean_invariance_error"] = summary.max_mean_invariance_error;
  ctx.out << j.dump(2) << '\n';
  return summary.disagreements == 0 ? kOk : kDisagreement;
}

}  // namespace

std::string format_number(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 12);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian-state mixing: fidelity thresholds and entanglement verdicts"};
  app.name(args.empty() ? "gaussmix" : args.front());
  app.require_subcommand(1);

  Options opts;
  auto scenario_flag = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--scenario", opts.scenario, "scenario JSON file");
    if (required) o->required();
  };
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--quiet", opts.quiet, "suppress warnings");
  };

  CLI::App* check = app.add_subcommand("check", "verdict JSON for one scenario");
  scenario_flag(check, true);
  check->add_option("--tau", opts.tau, "override the scenario coupling");
  check->add_option("--points", opts.points, "grid size of the io-fidelity sign check");
  common(check);

  std::vector<std::pair<CLI::App*, std::optional<Mode>>> sweeps;
  for (const auto& [name, preset, help] :
       {std::tuple{"sweep", std::optional<Mode>{}, "CSV sweep of a scenario"},
        std::tuple{"io-fidelity", std::optional<Mode>{Mode::kIoFidelity}, "sweep with input-output fidelities"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    scenario_flag(sub, true);
    sub->add_option("--out", opts.out, "output CSV path")->required();
    sub->add_option("--points", opts.points, "override the sweep grid size");
    sub->add_option("--tau", opts.tau, "override the scenario coupling");
    common(sub);
    sweeps.emplace_back(sub, preset);
  }

  CLI::App* cert = app.add_subcommand("certify", "randomized certification of the fidelity criterion");
  cert->add_option("--samples", opts.samples, "number of random draws");
  cert->add_option("--seed", opts.seed, "64-bit seed (overrides " + std::string(kSeedEnvVar) + ")");
  cert->add_option("--out", opts.out, "per-check CSV path");
  scenario_flag(cert, false);
  common(cert);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (check->parsed()) return cmd_check({out, err, opts, *check});
    for (const auto& [sub, preset] : sweeps) {
      if (sub->parsed()) return cmd_sweep({out, err, opts, *sub}, preset);
    }
    return cmd_certify({out, err, opts, *cert});
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::invalid_argument& e) {  // InvalidParameter, DimensionMismatch
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kUnwritableOutput;
  } catch (const std::exception& e) {  // DomainError, NonPhysicalState, NumericError
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace gaussmix::cli

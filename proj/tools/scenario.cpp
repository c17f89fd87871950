#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "gaussmix/errors.hpp"
#include "gaussmix/evolution.hpp"

namespace gaussmix::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ScenarioError(where + " must be a JSON object");
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) throw ScenarioError("unknown field '" + item.key() + "' in " + where);
  }
}

double number(const json& j, const std::string& key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_number()) throw ScenarioError(where + "." + key + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ScenarioError(where + "." + key + " must be finite");
  return x;
}

double number_or(const json& j, const std::string& key, double fallback, const std::string& where) {
  return j.contains(key) ? number(j, key, where) : fallback;
}

Mode parse_mode(const json& v) {
  if (!v.is_string()) throw ScenarioError("mode must be a string");
  const auto s = v.get<std::string>();
  if (s == "theorem") return Mode::kTheorem;
  if (s == "corollary") return Mode::kCorollary;
  if (s == "io-fidelity") return Mode::kIoFidelity;
  throw ScenarioError("unknown mode '" + s + "' (expected theorem, corollary or io-fidelity)");
}

SweepSpec parse_sweep(const json& j) {
  reject_unknown(j, {"variable", "from", "to", "points"}, "sweep");
  SweepSpec spec;
  if (!j.contains("variable") || !j["variable"].is_string()) throw ScenarioError("sweep.variable must be \"psi\" or \"tau\"");
  const auto var = j["variable"].get<std::string>();
  if (var == "psi") {
    spec.variable = SweepSpec::Variable::kPsi;
  } else if (var == "tau") {
    spec.variable = SweepSpec::Variable::kTau;
  } else {
    throw ScenarioError("sweep.variable must be \"psi\" or \"tau\", got '" + var + "'");
  }
  for (const char* key : {"from", "to", "points"}) {
    if (!j.contains(key)) throw ScenarioError(std::string("sweep.") + key + " is required");
  }
  spec.from = number(j, "from", "sweep");
  spec.to = number(j, "to", "sweep");
  if (!j["points"].is_number_integer()) throw ScenarioError("sweep.points must be an integer");
  const auto points = j["points"].get<std::int64_t>();
  if (points < 2 || points > 100'000'000) throw ScenarioError("sweep.points must be >= 2");
  spec.points = static_cast<int>(points);
  return spec;
}

}  // namespace

GaussianParams params_from_json(const json& j) {
  reject_unknown(j, {"alpha_re", "alpha_im", "r", "psi", "n_th"}, "state");
  GaussianParams p;
  p.alpha_re = number_or(j, "alpha_re", 0.0, "state");
  p.alpha_im = number_or(j, "alpha_im", 0.0, "state");
  p.r = number_or(j, "r", 0.0, "state");
  p.psi = number_or(j, "psi", 0.0, "state");
  p.n_th = number_or(j, "n_th", 0.0, "state");
  try {
    // psi stays as written so sweeps and reports echo the user's value
    validated(p);
  } catch (const InvalidParameter& e) {
    throw ScenarioError(e.what());
  }
  return p;
}

json params_to_json(const GaussianParams& p) {
  return {{"alpha_re", p.alpha_re}, {"alpha_im", p.alpha_im}, {"r", p.r}, {"psi", p.psi}, {"n_th", p.n_th}};
}

Scenario parse_scenario(const json& j) {
  reject_unknown(j, {"state1", "state2", "tau", "g", "t", "sweep", "seed", "mode"}, "scenario");
  if (!j.contains("state1") || !j.contains("state2")) throw ScenarioError("scenario needs state1 and state2");

  Scenario sc;
  sc.state1 = params_from_json(j["state1"]);
  sc.state2 = params_from_json(j["state2"]);

  const bool has_tau = j.contains("tau");
  const bool has_g = j.contains("g");
  const bool has_t = j.contains("t");
  if (has_g != has_t) throw ScenarioError("g and t must be given together");
  if (has_tau == has_g) throw ScenarioError("give exactly one of tau or (g, t)");
  // range errors on tau are domain errors, reported by the commands
  sc.tau = has_tau ? number(j, "tau", "scenario")
                   : CouplingSpec::from_rate(number(j, "g", "scenario"), number(j, "t", "scenario")).tau();

  if (j.contains("sweep")) sc.sweep = parse_sweep(j["sweep"]);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ScenarioError("seed must be a non-negative integer");
    sc.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("mode")) sc.mode = parse_mode(j["mode"]);
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError("scenario '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_scenario(j);
}

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::kTheorem: return "theorem";
    case Mode::kCorollary: return "corollary";
    case Mode::kIoFidelity: return "io-fidelity";
  }
  return "theorem";
}

}  // namespace gaussmix::cli

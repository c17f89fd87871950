#pragma once

// Scenario files: the JSON input of the gaussmix command line tool.
//
//   {
//     "state1": {"alpha_re": 0, "alpha_im": 0, "r": 0.5, "psi": 0, "n_th": 0.2},
//     "state2": {"r": 0.7, "psi": 3.14159, "n_th": 0.3},
//     "tau": 0.5,                       // or "g" and "t" with tau = cos^2(g t)
//     "sweep": {"variable": "psi", "from": 0, "to": 6.283185307179586, "points": 1000},
//     "seed": 42,
//     "mode": "theorem"                 // "theorem" | "corollary" | "io-fidelity"
//   }
//
// Missing state fields default to 0. Unknown fields are rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gaussmix/gaussian.hpp"

namespace gaussmix::cli {

/// Malformed scenario input. Maps to exit code 2.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

enum class Mode { kTheorem, kCorollary, kIoFidelity };

struct SweepSpec {
  enum class Variable { kPsi, kTau };
  Variable variable = Variable::kPsi;
  double from = 0.0;
  double to = 0.0;
  int points = 2;
};

struct Scenario {
  GaussianParams state1;
  GaussianParams state2;
  double tau = 0.0;
  std::optional<SweepSpec> sweep;
  std::optional<std::uint64_t> seed;
  Mode mode = Mode::kTheorem;
};

GaussianParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const GaussianParams& p);

Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);

const char* mode_name(Mode mode);

}  // namespace gaussmix::cli

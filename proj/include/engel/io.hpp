#pragma once

// JSON serialization and the run configuration shared by the CLI and tests.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "engel/acceptance.hpp"
#include "engel/synthesis.hpp"

namespace engel {

using Json = nlohmann::ordered_json;

/// {"chart": "N1", "params": {"k": ..., "u1": ..., "u2": ..., "sigma": ...}}
Json to_json(const ChartPoint& nu);
Json to_json(const Point& q);
Json to_json(const Stratum& s);
/// Stratum label, multiplicity, family description when present, and the
/// minimizer list {chart, params, time, residual, covector}.
Json to_json(const SynthesisResult& r);
Json to_json(const CriterionResult& r);

/// Inverse of to_json(ChartPoint). Throws std::invalid_argument on unknown
/// charts or missing parameters.
ChartPoint chart_from_json(const Json& j);

inline constexpr const char* kConfigEnvVar = "ENGEL_CONFIG";

struct Config {
  double eps_class = kDefaultEpsClass;
  double eps_strat = 1e-9;
  double eps_zero = 1e-12;
  double tol = 1e-7;
  double ode_rtol = 1e-10;
  double ode_atol = 1e-12;
  std::string format = "csv";  // tabular output: csv | json
  int samples = 200;           // geodesic trajectory samples
  int grid = 200;              // curve k-grid
  int family_samples = 32;
  int shooting_starts = 6;
  std::uint64_t seed = 20240917;

  /// Throws std::invalid_argument unless tolerances are positive, counts >= 2
  /// and the format is known.
  void validate() const;
  SynthesisOptions synthesis() const;
  OdeTolerance ode() const { return {ode_rtol, ode_atol}; }
};

Json to_json(const Config& c);
/// Overrides the fields of base that appear in j; unknown keys are rejected.
Config config_from_json(const Json& j, Config base = {});
/// Reads a JSON config file. Throws std::invalid_argument when it cannot be
/// read or parsed.
Config load_config(const std::string& path, Config base = {});

}  // namespace engel

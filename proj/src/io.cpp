#include "engel/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace engel {
namespace {

const std::vector<std::string>& param_names(std::size_t index) {
  static const std::vector<std::string> names[] = {
      {"k", "u1", "u2", "sigma"},
      {"k", "u1", "u2", "sigma", "sign_c"},
      {"p", "tau", "sigma", "sign_c"},
      {"theta", "c", "t"},
      {"theta", "t"},
  };
  return names[index];
}

}  // namespace

Json to_json(const ChartPoint& nu) {
  Json params = Json::object();
  const auto& names = param_names(nu.index());
  const auto values = chart_params(nu);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (names[i] == "sign_c") {
      params[names[i]] = static_cast<int>(values[i]);
    } else {
      params[names[i]] = values[i];
    }
  }
  return {{"chart", chart_name(nu)}, {"params", params}};
}

Json to_json(const Point& q) { return {{"x", q.x}, {"y", q.y}, {"z", q.z}, {"w", q.w}}; }

Json to_json(const Stratum& s) {
  return {{"label", s.label()},
          {"multiplicity", to_string(s.multiplicity)},
          {"maxwell", s.is_maxwell()},
          {"conjugate", s.is_conjugate()},
          {"cut", s.is_cut()}};
}

Json to_json(const SynthesisResult& r) {
  Json out = {{"stratum", r.stratum.label()}, {"multiplicity", to_string(r.stratum.multiplicity)}};
  if (r.family) out["family"] = {{"k", r.family->k}, {"u1", r.family->u1}, {"sigma", r.family->sigma}};
  Json list = Json::array();
  for (const Minimizer& m : r.minimizers) {
    Json e = to_json(m.nu);
    e["time"] = m.time;
    e["residual"] = m.residual;
    e["covector"] = {{"theta", m.geodesic.lambda.theta}, {"c", m.geodesic.lambda.c}, {"alpha", m.geodesic.lambda.alpha}};
    list.push_back(std::move(e));
  }
  out["minimizers"] = std::move(list);
  return out;
}

Json to_json(const CriterionResult& r) {
  return {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
}

ChartPoint chart_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("chart") || !j.contains("params")) {
    throw std::invalid_argument("chart_from_json: expected {chart, params}");
  }
  const std::string name = j.at("chart").get<std::string>();
  static const char* charts[] = {"N1", "N2", "N3", "N6", "N7"};
  std::size_t index = 5;
  for (std::size_t i = 0; i < 5; ++i) {
    if (name == charts[i]) index = i;
  }
  if (index == 5) throw std::invalid_argument("chart_from_json: unknown chart " + name);
  const Json& p = j.at("params");
  std::vector<double> v;
  for (const std::string& key : param_names(index)) {
    if (!p.contains(key) || !p.at(key).is_number()) {
      throw std::invalid_argument("chart_from_json: missing parameter " + key);
    }
    v.push_back(p.at(key).get<double>());
  }
  switch (index) {
    case 0: return ChartN1{v[0], v[1], v[2], v[3]};
    case 1: return ChartN2{v[0], v[1], v[2], v[3], static_cast<int>(v[4])};
    case 2: return ChartN3{v[0], v[1], v[2], static_cast<int>(v[3])};
    case 3: return ChartN6{v[0], v[1], v[2]};
    default: return ChartN7{v[0], v[1]};
  }
}

// ------------------------------------------------------------------- config

void Config::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string("config: ") + name + " must be positive");
  };
  positive(eps_class, "eps_class");
  positive(eps_strat, "eps_strat");
  positive(eps_zero, "eps_zero");
  positive(tol, "tol");
  positive(ode_rtol, "ode_rtol");
  positive(ode_atol, "ode_atol");
  auto at_least_two = [](int v, const char* name) {
    if (v < 2) throw std::invalid_argument(std::string("config: ") + name + " must be >= 2");
  };
  at_least_two(samples, "samples");
  at_least_two(grid, "grid");
  at_least_two(family_samples, "family_samples");
  if (shooting_starts < 1) throw std::invalid_argument("config: shooting_starts must be >= 1");
  if (format != "csv" && format != "json") throw std::invalid_argument("config: format must be csv or json");
}

SynthesisOptions Config::synthesis() const {
  SynthesisOptions o;
  o.tol = tol;
  o.family_samples = family_samples;
  o.shooting_starts = shooting_starts;
  o.strata = {eps_strat, eps_zero};
  o.ode = ode();
  return o;
}

Json to_json(const Config& c) {
  return {{"eps_class", c.eps_class}, {"eps_strat", c.eps_strat}, {"eps_zero", c.eps_zero},
          {"tol", c.tol},             {"ode_rtol", c.ode_rtol},   {"ode_atol", c.ode_atol},
          {"format", c.format},       {"samples", c.samples},     {"grid", c.grid},
          {"family_samples", c.family_samples}, {"shooting_starts", c.shooting_starts}, {"seed", c.seed}};
}

Config config_from_json(const Json& j, Config c) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "eps_class") c.eps_class = v.get<double>();
      else if (key == "eps_strat") c.eps_strat = v.get<double>();
      else if (key == "eps_zero") c.eps_zero = v.get<double>();
      else if (key == "tol") c.tol = v.get<double>();
      else if (key == "ode_rtol") c.ode_rtol = v.get<double>();
      else if (key == "ode_atol") c.ode_atol = v.get<double>();
      else if (key == "format") c.format = v.get<std::string>();
      else if (key == "samples") c.samples = v.get<int>();
      else if (key == "grid") c.grid = v.get<int>();
      else if (key == "family_samples") c.family_samples = v.get<int>();
      else if (key == "shooting_starts") c.shooting_starts = v.get<int>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else throw std::invalid_argument("config: unknown key " + key);
    } catch (const Json::type_error&) {
      throw std::invalid_argument("config: wrong type for " + key);
    }
  }
  return c;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("config: " + path + ": " + e.what());
  }
  return config_from_json(j, base);
}

}  // namespace engel

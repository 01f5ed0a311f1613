#include "ugsb/cli/scenario.hpp"

#include <cmath>
#include <fstream>

#include "ugsb/core/param_io.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/units.hpp"

namespace ugsb::cli {

using nlohmann::json;

std::string_view to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::detunings: return "detunings";
    case SweepKind::delta: return "delta";
    case SweepKind::decay: return "decay";
    case SweepKind::doppler: return "doppler";
    case SweepKind::distance: return "distance";
  }
  return "?";
}

SweepKind sweep_kind_from_string(std::string_view s) {
  for (SweepKind k : {SweepKind::detunings, SweepKind::delta, SweepKind::decay, SweepKind::doppler, SweepKind::distance}) {
    if (to_string(k) == s) return k;
  }
  throw ConfigurationError("unknown sweep '" + std::string(s) + "'");
}

Eigen::Vector4cd named_state(std::string_view name) {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  if (name == "plus_plus") return robustness::plus_plus_state();
  if (name == "plus_one") return robustness::plus_one_state();
  if (name == "fig4") {
    const double a0 = 1.0 / std::sqrt(3.0), a1 = std::sqrt(2.0 / 3.0);
    const double b0 = std::sqrt(3.0) / 2.0, b1 = 0.5;
    v << a0 * b0, a0 * b1, a1 * b0, a1 * b1;
    return v;
  }
  if (name.size() == 2 && (name[0] == '0' || name[0] == '1') && (name[1] == '0' || name[1] == '1')) {
    v((name[0] - '0') * 2 + (name[1] - '0')) = 1.0;
    return v;
  }
  throw ConfigurationError("unknown initial state '" + std::string(name) + "'");
}

namespace {

template <typename T>
std::optional<T> opt(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigurationError(std::string("scenario key '") + key + "' has the wrong type");
  }
}

json opt_json(const json& j, const char* key) { return j.contains(key) ? j.at(key) : json(); }

robustness::Range range_of(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 3) throw ConfigurationError(std::string(where) + " must be [lo, hi, count]");
  const double count = j[2].get<double>();
  if (!(count >= 1.0) || count != std::floor(count)) throw ConfigurationError(std::string(where) + ": bad count");
  return {j[0].get<double>(), j[1].get<double>(), static_cast<std::size_t>(count)};
}

}  // namespace

ScenarioConfig scenario_from_json(const json& j) {
  core::reject_unknown_keys(j,
                            {"name", "params", "gate", "delta_MHz", "initial_state", "average_grid", "time_points",
                             "noise", "sweep", "output", "seed"},
                            "scenario");
  if (!j.contains("params")) throw ConfigurationError("scenario: missing 'params'");
  ScenarioConfig c;
  c.name = opt<std::string>(j, "name").value_or("");
  c.params_json = j.at("params");
  c.gate = opt<std::string>(j, "gate");
  c.delta_mhz = opt<double>(j, "delta_MHz");
  c.initial_state = opt_json(j, "initial_state");
  c.average_grid = opt<int>(j, "average_grid");
  c.time_points = opt<int>(j, "time_points");
  c.noise_json = opt_json(j, "noise");
  c.sweep_json = opt_json(j, "sweep");
  c.output_json = opt_json(j, "output");
  c.seed = opt<std::uint64_t>(j, "seed");
  if (!c.noise_json.is_null()) {
    core::reject_unknown_keys(c.noise_json,
                              {"temperature_uK", "k_eff_per_m", "mass_kg", "mean_distance_um", "sigma_distance_um",
                               "tau_us", "samples"},
                              "noise");
  }
  if (!c.sweep_json.is_null()) {
    core::reject_unknown_keys(c.sweep_json, {"kind", "values", "delta0_over_omega", "delta1_over_omega"}, "sweep");
  }
  if (!c.output_json.is_null()) core::reject_unknown_keys(c.output_json, {"dir"}, "output");
  // parse everything once so errors surface at load time
  (void)c.params();
  if (c.gate) (void)c.gate_kind();
  (void)c.initial();
  (void)c.noise();
  (void)c.sweep();
  return c;
}

json scenario_to_json(const ScenarioConfig& c) {
  json j;
  if (!c.name.empty()) j["name"] = c.name;
  j["params"] = c.params_json;
  if (c.gate) j["gate"] = *c.gate;
  if (c.delta_mhz) j["delta_MHz"] = *c.delta_mhz;
  if (!c.initial_state.is_null()) j["initial_state"] = c.initial_state;
  if (c.average_grid) j["average_grid"] = *c.average_grid;
  if (c.time_points) j["time_points"] = *c.time_points;
  if (!c.noise_json.is_null()) j["noise"] = c.noise_json;
  if (!c.sweep_json.is_null()) j["sweep"] = c.sweep_json;
  if (!c.output_json.is_null()) j["output"] = c.output_json;
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigurationError("config '" + path + "': " + e.what());
  }
  return scenario_from_json(j);
}

core::ParamSet ScenarioConfig::params() const {
  core::ParamSet p = core::params_from_json(params_json);
  p.validate();
  return p;
}

gates::GateKind ScenarioConfig::gate_kind() const { return gates::gate_kind_from_string(gate.value_or("holonomic")); }

double ScenarioConfig::delta() const { return units::from_mhz(delta_mhz.value_or(0.0)); }

Eigen::Vector4cd ScenarioConfig::initial() const {
  if (initial_state.is_null()) return robustness::plus_plus_state();
  if (initial_state.is_string()) return named_state(initial_state.get<std::string>());
  if (!initial_state.is_array() || initial_state.size() != 4) {
    throw ConfigurationError("initial_state must be a name or four [re, im] pairs");
  }
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) {
    const json& a = initial_state[static_cast<std::size_t>(i)];
    if (!a.is_array() || a.size() != 2) throw ConfigurationError("initial_state amplitudes must be [re, im]");
    v(i) = {a[0].get<double>(), a[1].get<double>()};
  }
  if (std::abs(v.norm() - 1.0) > 1e-9) throw ConfigurationError("initial_state is not normalized");
  return v;
}

robustness::NoiseSpec ScenarioConfig::noise() const {
  robustness::NoiseSpec n;
  if (seed) n.seed = *seed;
  if (noise_json.is_null()) return n;
  const json& j = noise_json;
  n.doppler.temperature_uk = j.value("temperature_uK", 0.0);
  n.doppler.k_eff = j.value("k_eff_per_m", n.doppler.k_eff);
  n.doppler.mass = j.value("mass_kg", n.doppler.mass);
  if (j.contains("mean_distance_um")) n.distance.mean_um = j.at("mean_distance_um").get<double>();
  n.distance.sigma_um = j.value("sigma_distance_um", 0.0);
  if (j.contains("tau_us")) n.tau = j.at("tau_us").get<double>();
  n.samples = j.value("samples", n.samples);
  return n;
}

SweepSpec ScenarioConfig::sweep() const {
  SweepSpec s;
  if (sweep_json.is_null()) return s;
  if (sweep_json.contains("kind")) s.kind = sweep_kind_from_string(sweep_json.at("kind").get<std::string>());
  if (sweep_json.contains("values")) s.values = sweep_json.at("values").get<std::vector<double>>();
  if (sweep_json.contains("delta0_over_omega")) s.delta0_ratio = range_of(sweep_json.at("delta0_over_omega"), "delta0_over_omega");
  if (sweep_json.contains("delta1_over_omega")) s.delta1_ratio = range_of(sweep_json.at("delta1_over_omega"), "delta1_over_omega");
  return s;
}

std::string ScenarioConfig::output_dir() const {
  if (output_json.is_object() && output_json.contains("dir")) return output_json.at("dir").get<std::string>();
  return ".";
}

}  // namespace ugsb::cli

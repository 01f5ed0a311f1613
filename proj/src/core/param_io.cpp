#include "ugsb/core/param_io.hpp"

#include <algorithm>
#include <string>

#include "ugsb/core/builders.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/units.hpp"

namespace ugsb::core {

using nlohmann::json;
using units::from_mhz;
using units::to_mhz;

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  if (!j.is_object()) throw ConfigurationError(std::string(where) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigurationError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

namespace {

double number(const json& j, const char* key, std::string_view where) {
  if (!j.contains(key)) {
    throw ConfigurationError("missing key '" + std::string(key) + "' in " + std::string(where));
  }
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw ConfigurationError("key '" + std::string(key) + "' in " + std::string(where) +
                             " must be a number");
  }
  return v.get<double>();
}

double mhz(const json& j, const char* key, std::string_view where) {
  return from_mhz(number(j, key, where));
}

double mhz_or(const json& j, const char* key, double fallback, std::string_view where) {
  return j.contains(key) ? mhz(j, key, where) : fallback;
}

}  // namespace

json params_to_json(const ParamSet& p) {
  json drive = {
      {"omega0_MHz", to_mhz(p.drive.omega0)},
      {"omega1_MHz", to_mhz(p.drive.omega1)},
      {"delta0_MHz", to_mhz(p.drive.delta0)},
      {"delta1_MHz", to_mhz(p.drive.delta1)},
      {"aux_mode", std::string(to_string(p.drive.aux_mode))},
      {"compensation_scope", std::string(to_string(p.drive.compensation_scope))},
      {"aux",
       {{"omega0_MHz", to_mhz(p.drive.aux.omega0)},
        {"omega1_MHz", to_mhz(p.drive.aux.omega1)},
        {"delta0_MHz", to_mhz(p.drive.aux.delta0)},
        {"delta1_MHz", to_mhz(p.drive.aux.delta1)}}},
  };
  json coupling = {{"v_MHz", to_mhz(p.coupling.v)}};
  if (p.coupling.c6) coupling["c6_MHz_um6"] = to_mhz(*p.coupling.c6);
  json out = {
      {"drive", drive},
      {"coupling", coupling},
      {"doppler_MHz", {to_mhz(p.doppler[0]), to_mhz(p.doppler[1])}},
      {"leak_level", p.leak_level},
  };
  if (p.control) {
    out["control"] = {
        {"omega_c_MHz", to_mhz(p.control->omega_c)},
        {"v1c_MHz", to_mhz(p.control->v1c)},
        {"v2c_MHz", to_mhz(p.control->v2c)},
        {"doppler_on_control", p.control->doppler_on_control},
        {"doppler_c_MHz", to_mhz(p.control->doppler_c)},
    };
  }
  return out;
}

ParamSet params_from_json(const json& j) {
  reject_unknown_keys(j, {"drive", "coupling", "doppler_MHz", "control", "leak_level"}, "params");
  ParamSet p;

  if (!j.contains("drive")) throw ConfigurationError("params: missing 'drive'");
  const json& d = j.at("drive");
  reject_unknown_keys(d,
                      {"omega0_MHz", "omega1_MHz", "delta0_MHz", "delta1_MHz", "aux_mode",
                       "compensation_scope", "aux", "aux_scale"},
                      "drive");
  p.drive.omega0 = mhz(d, "omega0_MHz", "drive");
  p.drive.omega1 = mhz(d, "omega1_MHz", "drive");
  p.drive.delta0 = mhz(d, "delta0_MHz", "drive");
  p.drive.delta1 = mhz(d, "delta1_MHz", "drive");
  if (d.contains("aux_mode")) p.drive.aux_mode = aux_mode_from_string(d.at("aux_mode").get<std::string>());
  if (d.contains("compensation_scope")) {
    p.drive.compensation_scope =
        compensation_scope_from_string(d.at("compensation_scope").get<std::string>());
  }
  if (d.contains("aux") && d.contains("aux_scale")) {
    throw ConfigurationError("drive: give either 'aux' or 'aux_scale', not both");
  }
  if (d.contains("aux")) {
    const json& a = d.at("aux");
    reject_unknown_keys(a, {"omega0_MHz", "omega1_MHz", "delta0_MHz", "delta1_MHz"}, "drive.aux");
    p.drive.aux = AuxDrive{mhz(a, "omega0_MHz", "drive.aux"), mhz(a, "omega1_MHz", "drive.aux"),
                           mhz(a, "delta0_MHz", "drive.aux"), mhz(a, "delta1_MHz", "drive.aux")};
  } else {
    p.drive.aux = p.drive.matched_aux(d.contains("aux_scale") ? number(d, "aux_scale", "drive") : 1.0);
  }

  if (j.contains("coupling")) {
    const json& c = j.at("coupling");
    reject_unknown_keys(c, {"v_MHz", "c6_MHz_um6", "distance_um"}, "coupling");
    const bool has_v = c.contains("v_MHz");
    const bool has_c6 = c.contains("c6_MHz_um6");
    const bool has_d = c.contains("distance_um");
    if (has_d && !has_c6) throw ConfigurationError("coupling: distance_um needs c6_MHz_um6");
    if (has_v && has_d) throw ConfigurationError("coupling: give v_MHz or distance_um, not both");
    if (has_c6 && has_d) {
      p.coupling = RydbergCoupling::from_c6(mhz(c, "c6_MHz_um6", "coupling"), number(c, "distance_um", "coupling"));
    } else if (has_c6 && has_v) {
      p.coupling = RydbergCoupling::with_strength(mhz(c, "v_MHz", "coupling"), mhz(c, "c6_MHz_um6", "coupling"));
    } else {
      p.coupling.v = mhz_or(c, "v_MHz", 0.0, "coupling");
      if (has_c6) p.coupling.c6 = mhz(c, "c6_MHz_um6", "coupling");
    }
  }

  if (j.contains("doppler_MHz")) {
    const json& dm = j.at("doppler_MHz");
    if (!dm.is_array() || dm.size() != 2) throw ConfigurationError("doppler_MHz must be [d1, d2]");
    p.doppler = {from_mhz(dm[0].get<double>()), from_mhz(dm[1].get<double>())};
  }

  if (j.contains("control")) {
    const json& c = j.at("control");
    reject_unknown_keys(c, {"omega_c_MHz", "v1c_MHz", "v2c_MHz", "doppler_on_control", "doppler_c_MHz"},
                        "control");
    ControlBlock cb;
    cb.omega_c = mhz(c, "omega_c_MHz", "control");
    cb.v1c = mhz(c, "v1c_MHz", "control");
    cb.v2c = mhz(c, "v2c_MHz", "control");
    cb.doppler_on_control = c.value("doppler_on_control", false);
    cb.doppler_c = mhz_or(c, "doppler_c_MHz", 0.0, "control");
    p.control = cb;
  }
  p.leak_level = j.value("leak_level", false);
  return p;
}

}  // namespace ugsb::core

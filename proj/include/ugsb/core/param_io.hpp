#pragma once

// ParamSet <-> JSON. Frequencies are written as nu/2pi in MHz under keys
// ending in "_MHz"; C6 as nu/2pi in MHz um^6; distances in um.
//
// {
//   "drive": {"omega0_MHz": 10, "omega1_MHz": 10, "delta0_MHz": 100, "delta1_MHz": 300,
//             "aux_mode": "ideal", "compensation_scope": "per_atom",
//             "aux": {"omega0_MHz": .., "omega1_MHz": .., "delta0_MHz": .., "delta1_MHz": ..}},
//   "coupling": {"v_MHz": 200.33, "c6_MHz_um6": 858400, "distance_um": 4.03},
//   "doppler_MHz": [0, 0],
//   "control": {"omega_c_MHz": 10, "v1c_MHz": 3, "v2c_MHz": 3},
//   "leak_level": false
// }
//
// "aux" may be replaced by "aux_scale": s (D' = s D, W' = sqrt(s) W); when both
// are absent the matched fields with s = 1 are used. Unknown keys are rejected.

#include <json.hpp>

#include "ugsb/core/params.hpp"

namespace ugsb::core {

nlohmann::json params_to_json(const ParamSet& params);
ParamSet params_from_json(const nlohmann::json& j);

/// Throws ConfigurationError naming the first key of `j` not in `allowed`.
void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<std::string_view> allowed,
                         std::string_view where);

}  // namespace ugsb::core

#include "ugsb/cli/presets.hpp"

#include <string>

#include "ugsb/errors.hpp"

namespace ugsb::cli {

namespace {

#define UGSB_RB87 R"("drive": {"omega0_MHz": 10, "omega1_MHz": 10, "delta0_MHz": 100, "delta1_MHz": 300}, "coupling": {"c6_MHz_um6": 858400})"

const std::vector<Preset> kPresets = {
    {"derive_rb87", "derive", "effective model, required V and d for 87Rb C6",
     R"({"name": "derive_rb87", "params": {)" UGSB_RB87 R"(}, "gate": "dynamical", "delta_MHz": 3.36})"},
    {"derive_symmetric", "derive", "equal detunings, W_eff = 0",
     R"({"name": "derive_symmetric", "params": {"drive": {"omega0_MHz": 10, "omega1_MHz": 10, "delta0_MHz": 200, "delta1_MHz": 200}}})"},
    {"swap_plus_plus", "swap", "holonomic SWAP on |+>|+>",
     R"({"name": "swap_plus_plus", "params": {)" UGSB_RB87 R"(}, "gate": "holonomic", "initial_state": "plus_plus", "time_points": 201})"},
    {"fig3_detunings", "sweep", "holonomic SWAP fidelity over D0/W x D1/W",
     R"({"name": "fig3_detunings", "params": {)" UGSB_RB87 R"(}, "gate": "holonomic",
        "sweep": {"kind": "detunings", "delta0_over_omega": [5, 20, 16], "delta1_over_omega": [20.1, 40, 20]}})"},
    {"fig4_holonomic", "swap", "holonomic SWAP populations and average fidelity",
     R"({"name": "fig4_holonomic", "params": {)" UGSB_RB87 R"(}, "gate": "holonomic", "initial_state": "fig4",
        "average_grid": 21, "time_points": 201})"},
    {"fig5a_delta", "sweep", "dynamical SWAP fidelity over delta",
     R"({"name": "fig5a_delta", "params": {)" UGSB_RB87 R"(}, "gate": "dynamical", "initial_state": "fig4",
        "sweep": {"kind": "delta", "values": [1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0, 3.25, 3.36, 3.5, 3.75, 4.0, 4.25, 4.5]}})"},
    {"fig5b_dynamical", "swap", "dynamical SWAP populations and average fidelity",
     R"({"name": "fig5b_dynamical", "params": {)" UGSB_RB87 R"(}, "gate": "dynamical", "delta_MHz": 3.36,
        "initial_state": "fig4", "average_grid": 21, "time_points": 401})"},
    {"fig6a_decay_holonomic", "sweep", "holonomic SWAP under Rydberg decay",
     R"({"name": "fig6a_decay_holonomic", "params": {)" UGSB_RB87 R"(}, "gate": "holonomic", "initial_state": "plus_one",
        "sweep": {"kind": "decay", "values": [50, 100, 200, 300, 400]}})"},
    {"fig6a_decay_dynamical", "sweep", "dynamical SWAP under Rydberg decay",
     R"({"name": "fig6a_decay_dynamical", "params": {)" UGSB_RB87 R"(}, "gate": "dynamical", "delta_MHz": 3.36,
        "initial_state": "plus_one", "sweep": {"kind": "decay", "values": [50, 100, 200, 300, 400]}})"},
    {"fig6b_doppler_holonomic", "sweep", "holonomic SWAP under Doppler dephasing",
     R"({"name": "fig6b_doppler_holonomic", "params": {)" UGSB_RB87 R"(}, "gate": "holonomic", "initial_state": "plus_one",
        "noise": {"k_eff_per_m": 8.76e6, "samples": 201}, "seed": 1,
        "sweep": {"kind": "doppler", "values": [0, 2.5, 5, 7.5, 10]}})"},
    {"fig6b_doppler_dynamical", "sweep", "dynamical SWAP under Doppler dephasing",
     R"({"name": "fig6b_doppler_dynamical", "params": {)" UGSB_RB87 R"(}, "gate": "dynamical", "delta_MHz": 3.36,
        "initial_state": "plus_one", "noise": {"k_eff_per_m": 8.76e6, "samples": 201}, "seed": 1,
        "sweep": {"kind": "doppler", "values": [0, 2.5, 5, 7.5, 10]}})"},
    {"fig7_distance_holonomic", "sweep", "holonomic SWAP under distance jitter",
     R"({"name": "fig7_distance_holonomic", "params": {)" UGSB_RB87 R"(}, "gate": "holonomic", "initial_state": "plus_one",
        "noise": {"samples": 201}, "seed": 2,
        "sweep": {"kind": "distance", "values": [0, 0.001, 0.005, 0.01, 0.015, 0.02]}})"},
    {"fig7_distance_dynamical", "sweep", "dynamical SWAP under distance jitter",
     R"({"name": "fig7_distance_dynamical", "params": {)" UGSB_RB87 R"(}, "gate": "dynamical", "delta_MHz": 3.36,
        "initial_state": "plus_one", "noise": {"samples": 201}, "seed": 2,
        "sweep": {"kind": "distance", "values": [0, 0.001, 0.005, 0.01, 0.015, 0.02]}})"},
    {"fig9_fredkin_holonomic", "fredkin", "Fredkin gate on a holonomic SWAP, V1c = V2c = 3 MHz",
     R"({"name": "fig9_fredkin_holonomic", "params": {)" UGSB_RB87 R"(,
        "control": {"omega_c_MHz": 10, "v1c_MHz": 3, "v2c_MHz": 3}}, "gate": "holonomic"})"},
    {"fig9_fredkin_dynamical", "fredkin", "Fredkin gate on a dynamical SWAP, V1c = V2c = 50 MHz",
     R"({"name": "fig9_fredkin_dynamical", "params": {)" UGSB_RB87 R"(,
        "control": {"omega_c_MHz": 10, "v1c_MHz": 50, "v2c_MHz": 50}}, "gate": "dynamical", "delta_MHz": 3.36})"},
};

#undef UGSB_RB87

}  // namespace

const std::vector<Preset>& presets() { return kPresets; }

ScenarioConfig preset_scenario(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return scenario_from_json(nlohmann::json::parse(p.json));
  }
  throw ConfigurationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace ugsb::cli

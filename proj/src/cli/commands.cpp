#include "ugsb/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "ugsb/core/builders.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/gates/average_fidelity.hpp"
#include "ugsb/gates/fidelity.hpp"
#include "ugsb/robustness/scans.hpp"
#include "ugsb/units.hpp"

namespace ugsb::cli {

using nlohmann::json;
using dynamics::format_number;
using units::to_mhz;

ScenarioConfig apply_overrides(const ScenarioConfig& config, const Overrides& o) {
  json j = scenario_to_json(config);
  if (o.seed) j["seed"] = *o.seed;
  if (o.samples) j["noise"]["samples"] = *o.samples;
  if (o.out) j["output"]["dir"] = *o.out;
  if (o.mode) j["gate"] = *o.mode;
  if (o.aux) j["params"]["drive"]["aux_mode"] = *o.aux;
  if (o.grid) {
    if (*o.grid < 2) throw ConfigurationError("--grid must be >= 2");
    j["average_grid"] = *o.grid;
    json& s = j["sweep"];
    if (s.is_object() && s.value("kind", "") == "detunings") {
      s["delta0_over_omega"] = json::array({5.0, 20.0, *o.grid});
      s["delta1_over_omega"] = json::array({20.1, 40.0, *o.grid});
    }
    if (s.is_null()) j.erase("sweep");
  }
  return scenario_from_json(j);
}

namespace {

namespace fs = std::filesystem;

std::string stem(const ScenarioConfig& c, std::string_view fallback) {
  return c.name.empty() ? std::string(fallback) : c.name;
}

std::string prepare(const ScenarioConfig& c, const std::string& file) {
  const fs::path dir(c.output_dir());
  fs::create_directories(dir);
  return (dir / file).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigurationError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> config_header(const ScenarioConfig& c) {
  const json j = scenario_to_json(c);
  return {"scenario: " + stem(c, "unnamed"), "config_hash: " + robustness::config_hash(j), "config: " + j.dump(),
          "units: time us, frequencies nu/2pi MHz"};
}

}  // namespace

DeriveReport cmd_derive(const ScenarioConfig& config) {
  const core::ParamSet p = config.params();
  DeriveReport r;
  const core::ParamSet ph = perturbation::with_delta(p, 0.0);
  r.holonomic = perturbation::derive_effective(ph);
  r.v_holonomic = ph.coupling.v;
  if (p.coupling.c6) r.distance_holonomic = core::distance_for_strength(*p.coupling.c6, r.v_holonomic);
  r.degenerate = r.holonomic.omega_eff == 0.0;
  if (!r.degenerate) r.t_holonomic = r.holonomic.holonomic_time();
  if (config.delta() != 0.0 && !r.degenerate) {
    const core::ParamSet pd = perturbation::with_delta(p, config.delta());
    r.dynamical = perturbation::derive_effective(pd);
    r.dispersive = perturbation::dispersive_rate(*r.dynamical);
    r.v_dynamical = pd.coupling.v;
    if (p.coupling.c6) r.distance_dynamical = core::distance_for_strength(*p.coupling.c6, pd.coupling.v);
  }
  return r;
}

nlohmann::ordered_json derive_json(const DeriveReport& r, double omega) {
  const auto& m = r.holonomic;
  nlohmann::ordered_json j = {
      {"delta00_MHz", to_mhz(m.d00)},      {"delta01_MHz", to_mhz(m.d01)}, {"delta10_MHz", to_mhz(m.d10)},
      {"delta11_MHz", to_mhz(m.d11)},      {"delta_rr_MHz", to_mhz(m.drr)}, {"delta_r0_MHz", to_mhz(m.dr0)},
      {"delta_0r_MHz", to_mhz(m.d0r)},     {"delta_r1_MHz", to_mhz(m.dr1)}, {"delta_1r_MHz", to_mhz(m.d1r)},
      {"omega_eff_MHz", to_mhz(m.omega_eff)}, {"degenerate", r.degenerate},
      {"V_holonomic_MHz", to_mhz(r.v_holonomic)},
  };
  if (r.distance_holonomic) j["d_holonomic_um"] = *r.distance_holonomic;
  if (r.t_holonomic) {
    j["T_holonomic_us"] = *r.t_holonomic;
    j["omega_T_over_2pi"] = omega * *r.t_holonomic / (2.0 * std::numbers::pi);
  }
  if (r.dynamical && r.dispersive) {
    j["delta_MHz"] = to_mhz(r.dynamical->delta);
    j["V_dynamical_MHz"] = to_mhz(r.v_dynamical);
    j["omega_d_MHz"] = to_mhz(r.dispersive->omega_d);
    j["T_dynamical_us"] = r.dispersive->gate_time;
    if (r.distance_dynamical) j["d_dynamical_um"] = *r.distance_dynamical;
  }
  return j;
}

void print_derive(std::ostream& os, const DeriveReport& r, double omega) {
  const auto j = derive_json(r, omega);
  for (const auto& [k, v] : j.items()) {
    os << k << " = ";
    if (v.is_boolean()) {
      os << (v.get<bool>() ? "true" : "false");
    } else {
      os << format_number(v.get<double>());
    }
    os << '\n';
  }
  if (r.degenerate) os << "warning: W_eff = 0, no SWAP gate for these detunings\n";
}

SwapOutput cmd_swap(const ScenarioConfig& config, const CommandContext& ctx) {
  const core::ParamSet p = config.params();
  const gates::GateSchedule s = gates::swap_schedule(p, config.gate_kind(), config.delta());
  const int points = config.time_points.value_or(201);
  if (points < 2) throw ConfigurationError("time_points must be >= 2");
  const double T = s.total_time();
  gates::RunOptions ro;
  for (int k = 0; k + 1 < points; ++k) ro.snapshot_times.push_back(T * k / (points - 1));
  const gates::ScheduleRun run = gates::run_schedule(s, {}, ro);

  const Eigen::Vector4cd psi4 = config.initial();
  const std::array<std::complex<double>, 4> amps{psi4(0), psi4(1), psi4(2), psi4(3)};
  const Eigen::VectorXcd psi0 = dynamics::QuantumState::computational(run.scheme, amps).amplitudes;
  const Eigen::VectorXcd target = gates::ideal_target(run.scheme, psi0, gates::ideal_swap());
  const std::size_t rr = run.scheme.index_of_label("rr");

  SwapOutput out;
  out.gate_time = T;
  out.series.header = config_header(config);
  out.series.header.push_back("gate: " + std::string(gates::to_string(s.kind)) + ", T_us = " + format_number(T));
  out.series.columns = {"t_us", "fidelity", "P00", "P01", "P10", "P11", "Prr"};
  std::vector<double> avg;
  if (config.average_grid) {
    std::vector<Eigen::MatrixXcd> restricted;
    for (std::size_t k = 0; k < run.columns.size(); ++k) restricted.push_back(run.restricted(k));
    avg = gates::average_fidelity_series(restricted, gates::ideal_swap(), gates::InitialStateGrid(*config.average_grid));
    out.series.columns.push_back("avg_fidelity");
    out.series.header.push_back("average grid N = " + std::to_string(*config.average_grid));
  }
  for (std::size_t k = 0; k < run.columns.size(); ++k) {
    const Eigen::VectorXcd psi = run.state_at(k, psi0);
    std::vector<double> row{run.times[k], gates::state_fidelity(psi, target)};
    for (std::size_t c : run.computational) row.push_back(std::norm(psi(static_cast<Eigen::Index>(c))));
    row.push_back(std::norm(psi(static_cast<Eigen::Index>(rr))));
    for (std::size_t c = 2; c < row.size(); ++c) {
      if (row[c] > 1.0 + 1e-9) throw InvariantViolation("population above 1 at t = " + format_number(run.times[k]));
    }
    if (!avg.empty()) row.push_back(avg[k]);
    out.series.rows.push_back(std::move(row));
  }
  out.final_fidelity = out.series.rows.back()[1];
  if (!avg.empty()) out.final_average = avg.back();
  if (ctx.write_files) {
    out.path = prepare(config, stem(config, "swap") + ".csv");
    dynamics::write_csv_file(out.path, out.series);
  }
  if (ctx.log) {
    *ctx.log << "T_us = " << format_number(T) << "\nfinal fidelity = " << format_number(out.final_fidelity) << '\n';
    if (out.final_average) *ctx.log << "final average fidelity = " << format_number(*out.final_average) << '\n';
  }
  return out;
}

SweepOutput cmd_sweep(const ScenarioConfig& config, std::optional<SweepKind> which, const CommandContext& ctx) {
  const core::ParamSet p = config.params();
  const SweepSpec spec = config.sweep();
  const SweepKind kind = which ? *which : spec.kind.value_or(SweepKind::detunings);
  robustness::ScanOptions so;
  so.workers = ctx.workers;
  const auto need_values = [&] {
    if (spec.values.empty()) throw ConfigurationError("sweep '" + std::string(to_string(kind)) + "' needs values");
    return spec.values;
  };
  const robustness::NoiseSpec noise = config.noise();
  SweepOutput out;
  switch (kind) {
    case SweepKind::detunings: {
      const int g = config.average_grid.value_or(0);
      const auto r0 = spec.delta0_ratio.value_or(robustness::Range{5.0, 20.0, g ? std::size_t(g) : 16});
      const auto r1 = spec.delta1_ratio.value_or(robustness::Range{20.1, 40.0, g ? std::size_t(g) : 20});
      out.result = robustness::sweep_detunings(p, r0, r1, so);
      break;
    }
    case SweepKind::delta: {
      std::vector<double> d;
      for (double v : need_values()) d.push_back(units::from_mhz(v));
      out.result = robustness::sweep_delta(p, d, config.initial(), so);
      break;
    }
    case SweepKind::decay:
      out.result = robustness::decay_scan(p, config.gate_kind(), config.delta(), need_values(), config.initial(), so);
      break;
    case SweepKind::doppler:
      out.result = robustness::doppler_scan(p, config.gate_kind(), config.delta(), need_values(), noise,
                                            config.initial(), so);
      break;
    case SweepKind::distance:
      out.result = robustness::distance_scan(p, config.gate_kind(), config.delta(), need_values(), noise,
                                             config.initial(), so);
      break;
  }
  out.result.params["scenario"] = scenario_to_json(config);
  out.result.params_hash = robustness::config_hash(out.result.params);
  out.result.validate();
  if (ctx.write_files) {
    const std::string base = stem(config, std::string(to_string(kind)));
    out.csv_path = prepare(config, base + ".csv");
    out.manifest_path = prepare(config, base + ".json");
    std::ofstream csv(out.csv_path);
    if (!csv) throw ConfigurationError("cannot write '" + out.csv_path + "'");
    robustness::write_csv(csv, out.result);
    write_text(out.manifest_path, robustness::manifest(out.result, robustness::utc_timestamp()).dump(2) + "\n");
  }
  if (ctx.log) robustness::write_csv(*ctx.log, out.result);
  return out;
}

FredkinOutput cmd_fredkin(const ScenarioConfig& config, const CommandContext& ctx) {
  const core::ParamSet p = config.params();
  const gates::GateSchedule s = gates::fredkin_schedule(p, config.gate_kind(), config.delta());
  const gates::ScheduleRun run = gates::run_schedule(s);
  FredkinOutput out;
  out.gate_time = s.total_time();
  const Eigen::MatrixXcd u = run.final_restricted();
  out.table = gates::truth_table(u, run.scheme);
  out.gate_fidelity = gates::gate_fidelity(u, gates::ideal_fredkin());
  for (Eigen::Index i = 0; i < out.table.populations.rows(); ++i) {
    if (out.table.populations.row(i).sum() > 1.0 + 1e-9) throw InvariantViolation("truth-table row sum above 1");
  }
  if (ctx.write_files) {
    out.path = prepare(config, stem(config, "fredkin") + ".csv");
    std::ofstream os(out.path);
    if (!os) throw ConfigurationError("cannot write '" + out.path + "'");
    auto header = config_header(config);
    header.push_back("gate_fidelity: " + format_number(out.gate_fidelity));
    header.push_back("T_us: " + format_number(out.gate_time));
    gates::write_truth_table_csv(os, out.table, header);
  }
  if (ctx.log) {
    *ctx.log << "gate fidelity = " << format_number(out.gate_fidelity) << "\nT_us = " << format_number(out.gate_time)
             << '\n';
    gates::write_truth_table_csv(*ctx.log, out.table);
  }
  return out;
}

}  // namespace ugsb::cli

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ugsb/cli/commands.hpp"
#include "ugsb/cli/presets.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/gates/schedule.hpp"
#include "ugsb/units.hpp"

using namespace ugsb;
using namespace ugsb::cli;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Scenario, RoundTripKeepsEveryField) {
  const json j = json::parse(R"({
    "name": "rt", "params": {"drive": {"omega0_MHz": 10, "omega1_MHz": 10, "delta0_MHz": 100, "delta1_MHz": 300}},
    "gate": "dynamical", "delta_MHz": 3.36, "initial_state": "plus_one", "average_grid": 5, "time_points": 11,
    "noise": {"temperature_uK": 10, "samples": 7, "tau_us": 400}, "sweep": {"kind": "doppler", "values": [0, 10]},
    "output": {"dir": "somewhere"}, "seed": 3})");
  const auto c = scenario_from_json(j);
  EXPECT_EQ(scenario_from_json(scenario_to_json(c)), c);
  EXPECT_EQ(c.gate_kind(), gates::GateKind::dynamical);
  EXPECT_NEAR(c.delta(), units::from_mhz(3.36), 1e-15);
  EXPECT_EQ(c.noise().samples, 7u);
  EXPECT_EQ(c.noise().tau, 400.0);
  EXPECT_EQ(c.noise().seed, 3u);
  EXPECT_EQ(c.sweep().kind, SweepKind::doppler);
  EXPECT_EQ(c.output_dir(), "somewhere");
  EXPECT_NEAR(c.initial()(3).real(), std::sqrt(0.5), 1e-15);
}

TEST(Scenario, RejectsUnknownKeysAndBadValues) {
  const std::string params = R"("params": {"drive": {"omega0_MHz": 10, "omega1_MHz": 10, "delta0_MHz": 100, "delta1_MHz": 300}})";
  EXPECT_THROW((void)scenario_from_json(json::parse("{" + params + R"(, "colour": 1})")), ConfigurationError);
  EXPECT_THROW((void)scenario_from_json(json::parse("{" + params + R"(, "noise": {"temp": 1}})")), ConfigurationError);
  EXPECT_THROW((void)scenario_from_json(json::parse("{" + params + R"(, "sweep": {"kind": "nope"}})")).sweep(),
               ConfigurationError);
  EXPECT_THROW((void)scenario_from_json(json::parse("{" + params + R"(, "gate": "other"})")).gate_kind(),
               ConfigurationError);
  EXPECT_THROW((void)named_state("plus_minus"), ConfigurationError);
  EXPECT_THROW((void)preset_scenario("nope"), ConfigurationError);
}

TEST(Scenario, NamedStatesAreNormalised) {
  for (const char* n : {"plus_plus", "plus_one", "fig4", "00", "01", "10", "11"}) {
    EXPECT_NEAR(named_state(n).norm(), 1.0, 1e-15) << n;
  }
  const auto f = named_state("fig4");
  EXPECT_NEAR(f(0).real(), std::sqrt(1.0 / 3.0) * std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(Presets, AllParseAndValidate) {
  ASSERT_FALSE(presets().empty());
  for (const auto& p : presets()) {
    const auto c = preset_scenario(p.name);
    EXPECT_EQ(c.name, p.name);
    EXPECT_NO_THROW((void)c.params()) << p.name;
    if (p.command == "sweep") EXPECT_TRUE(c.sweep().kind.has_value()) << p.name;
  }
}

TEST(Derive, MatchesLibraryCalls) {
  const auto c = preset_scenario("derive_rb87");
  const auto r = cmd_derive(c);
  EXPECT_NEAR(units::to_mhz(r.v_holonomic), 200.33, 0.01);
  ASSERT_TRUE(r.distance_holonomic.has_value());
  EXPECT_NEAR(*r.distance_holonomic, 4.03, 0.005);
  ASSERT_TRUE(r.dispersive.has_value());
  EXPECT_NEAR(r.dispersive->gate_time, 30.24, 0.01);
  const auto j = derive_json(r, c.params().drive.omega0);
  EXPECT_NEAR(j.at("V_holonomic_MHz").get<double>(), 200.33, 0.01);
  std::ostringstream os;
  print_derive(os, r, c.params().drive.omega0);
  EXPECT_NE(os.str().find("V_holonomic_MHz = 200.33"), std::string::npos);

  const auto sym = cmd_derive(preset_scenario("derive_symmetric"));
  EXPECT_TRUE(sym.degenerate);
  EXPECT_FALSE(sym.t_holonomic.has_value());
}

TEST(Overrides, ReplaceScenarioValues) {
  const auto c = preset_scenario("fig6b_doppler_holonomic");
  Overrides o;
  o.seed = 42;
  o.samples = 3;
  o.mode = "dynamical";
  o.out = "elsewhere";
  o.aux = "explicit";
  const auto d = apply_overrides(c, o);
  EXPECT_EQ(d.noise().seed, 42u);
  EXPECT_EQ(d.noise().samples, 3u);
  EXPECT_EQ(d.gate_kind(), gates::GateKind::dynamical);
  EXPECT_EQ(d.output_dir(), "elsewhere");
  EXPECT_EQ(d.params().drive.aux_mode, core::AuxMode::explicit_e);
  EXPECT_EQ(apply_overrides(c, {}), c);
  Overrides bad;
  bad.mode = "adiabatic";
  EXPECT_THROW((void)apply_overrides(c, bad).gate_kind(), ConfigurationError);
}

TEST(Swap, HolonomicPlusPlusSeries) {
  const auto c = preset_scenario("swap_plus_plus");
  const auto out = cmd_swap(c, CommandContext{.write_files = false});
  ASSERT_EQ(out.series.rows.size(), 201u);
  EXPECT_EQ(out.series.columns.front(), "t_us");
  EXPECT_NEAR(out.series.rows.back()[0], out.gate_time, 1e-12);
  EXPECT_NEAR(out.final_fidelity, 0.9978, 0.003);
  for (const auto& row : out.series.rows) {
    double total = 0.0;
    for (std::size_t k = 2; k <= 6; ++k) {
      EXPECT_LE(row[k], 1.0 + 1e-9);
      total += row[k];
    }
    EXPECT_LE(total, 1.0 + 1e-9);
  }
  EXPECT_FALSE(out.final_average.has_value());
}

TEST(Fredkin, TruthTableRowsStayNormalised) {
  const auto out = cmd_fredkin(preset_scenario("fig9_fredkin_holonomic"), CommandContext{.write_files = false});
  ASSERT_EQ(out.table.labels.size(), 8u);
  for (Eigen::Index r = 0; r < 8; ++r) EXPECT_LE(out.table.populations.row(r).sum(), 1.0 + 1e-9);
  EXPECT_GT(out.gate_fidelity, 0.9);
}

TEST(Sweep, RepeatedRunsWriteIdenticalCsv) {
  const auto dir = std::filesystem::temp_directory_path() / "ugsb_cli_sweep_test";
  std::filesystem::remove_all(dir);
  Overrides o;
  o.samples = 4;
  o.out = dir.string();
  const auto c = apply_overrides(preset_scenario("fig6b_doppler_holonomic"), o);
  const auto a = cmd_sweep(c, std::nullopt, CommandContext{.workers = 1});
  const std::string first = slurp(a.csv_path);
  const auto b = cmd_sweep(c, std::nullopt, CommandContext{.workers = 4});
  EXPECT_EQ(slurp(b.csv_path), first);
  EXPECT_NE(first.find("# seed: 1\n"), std::string::npos);
  auto m = json::parse(slurp(b.manifest_path));
  EXPECT_EQ(m.at("samples"), 4);
  EXPECT_EQ(m.at("params_hash"), a.result.params_hash);
  std::filesystem::remove_all(dir);
}

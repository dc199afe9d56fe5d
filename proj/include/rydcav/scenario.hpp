#pragma once

#include <json.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rydcav/design.hpp"
#include "rydcav/observables.hpp"
#include "rydcav/oracle.hpp"

namespace rydcav {

using json = nlohmann::json;

struct Scenario {
  std::string name = "custom";
  SystemParams system;
  PulseSchedule schedule;
  IntegratorConfig integrator;
  int initial_state = G0;
  double fit_t_min = 0.0;  // us; peaks before this are ignored by the frequency fit
  json effective;          // the parsed config with every default filled in
};

// Parses a config object; unknown keys are rejected. Errors carry the JSON
// path of the offending field. Re-parsing `effective` gives the same Scenario.
Scenario scenario_from_json(const json& cfg);

struct RunResult {
  Trajectory trajectory;
  ObservableSeries series;
  HealthReport health;
  double efficiency = 0.0;
  double fitted_frequency = 0.0;  // rad/us
  double max_double = 0.0;        // max P_RR + P_EE + P_ER
  double blockade_margin = 0.0;
  std::vector<std::string> warnings;
};

RunResult run_scenario(const Scenario& s);

// One row per sample: t_us, P_G0..P_L0, rate_per_us, eff_cum, re_mu12,
// im_mu12, ln_g2, S_total, S_atoms, S_photons, araki_lieb_ok.
void write_csv(std::ostream& os, const ObservableSeries& series);
json summary_json(const Scenario& s, const RunResult& r);

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

enum class SweepAxis { Cooperativity, Length, Atoms };

struct SweepSpec {
  Scenario base;
  SweepAxis axis = SweepAxis::Cooperativity;
  std::vector<double> values;
  design::CavityGeometry geometry;  // Length axis
  int workers = 1;
};

struct SweepRow {
  double cooperativity;
  double length_um;
  int n_atoms;
  double kappa_2pi_mhz;
  double g_2pi_mhz;
  double efficiency;
};

SweepSpec sweep_from_json(const json& cfg);
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// C = g^2 / (2 kappa Gamma_perp).
double cooperativity(const SystemParams& p);

struct ValidationReport {
  int n_atoms;
  double max_population_deviation;
  double max_leakage;
  double max_double_collective;
  double max_double_oracle;
  double collective_frequency;  // rad/us
  double oracle_frequency;
};

ValidationReport run_validation(const Scenario& s);
json validation_json(const ValidationReport& r);

design::CavityGeometry geometry_from_json(const json& cfg);
json design_json(const design::CavityGeometry& g);

}  // namespace rydcav

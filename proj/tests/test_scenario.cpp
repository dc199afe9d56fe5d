#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rydcav/error.hpp"
#include "rydcav/presets.hpp"
#include "rydcav/scenario.hpp"
#include "rydcav/units.hpp"

using namespace rydcav;
using units::from_2pi_mhz;

namespace {

std::string csv_of(const Scenario& s) {
  std::ostringstream os;
  write_csv(os, run_scenario(s).series);
  return os.str();
}

json small_config() {
  json c = preset_config("fig2");
  c["integrator"]["t_end_us"] = 0.9;
  return c;
}

}  // namespace

TEST_CASE("unknown keys are rejected with their path") {
  json c = small_config();
  c["system"]["kapa_2pi_mhz"] = 1.0;
  try {
    scenario_from_json(c);
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.path() == "system.kapa_2pi_mhz");
  }
  json d = small_config();
  d["integrator"]["dt_us"] = "fast";
  CHECK_THROWS_AS(scenario_from_json(d), ConfigError);
  json e = small_config();
  e["pulses"]["s"][0]["tau_us"] = -1.0;
  CHECK_THROWS_AS(scenario_from_json(e), ConfigError);
}

TEST_CASE("config units") {
  const Scenario s = scenario_from_json(small_config());
  CHECK(s.system.g == doctest::Approx(from_2pi_mhz(14.0)));
  CHECK(s.system.gamma_r == doctest::Approx(units::from_2pi_khz(1.4)));
  CHECK(s.schedule.delta_s == doctest::Approx(from_2pi_mhz(110.0)));
  CHECK(s.schedule.Delta(0.0) == doctest::Approx(-from_2pi_mhz(110.0)));
}

TEST_CASE("csv layout") {
  const std::string csv = csv_of(scenario_from_json(small_config()));
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header ==
        "t_us,P_G0,P_G1,P_G2,P_R0,P_R1,P_RR0,P_E0,P_E1,P_EE0,P_ER0,P_L0,rate_per_us,eff_cum,re_mu12,im_mu12,"
        "ln_g2,S_total,S_atoms,S_photons,araki_lieb_ok");
}

TEST_CASE("runs are deterministic and the effective config round-trips") {
  const Scenario s = scenario_from_json(small_config());
  const std::string a = csv_of(s);
  CHECK(a == csv_of(s));
  const Scenario again = scenario_from_json(s.effective);
  CHECK(again.effective == s.effective);
  CHECK(csv_of(again) == a);
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("preset parameters") {
  const Scenario f3 = scenario_from_json(preset_config("fig3", {.variant = "k0.3-dc0.3"}));
  CHECK(f3.system.kappa == doctest::Approx(from_2pi_mhz(4.3)));
  CHECK(f3.system.delta_c == doctest::Approx(from_2pi_mhz(4.3)));

  const Scenario f7 = scenario_from_json(preset_config("fig7", {.kappa_mode = "strong"}));
  CHECK(f7.system.kappa == doctest::Approx(from_2pi_mhz(8.0)));
  CHECK(f7.system.kappa / f7.system.g == doctest::Approx(0.15).epsilon(0.08));

  const Scenario f9 = scenario_from_json(preset_config("fig9"));
  CHECK(f9.system.gamma_perp == doctest::Approx(from_2pi_mhz(3.0)));
  CHECK(f9.system.gamma_perp == doctest::Approx(f9.system.gamma_0 / 2.0));
  CHECK(f9.schedule.chirp.start == doctest::Approx(from_2pi_mhz(-110.0)));
  CHECK(f9.schedule.chirp.end == doctest::Approx(from_2pi_mhz(55.0)));

  CHECK_THROWS_AS(preset_config("fig99"), ConfigError);
  CHECK_THROWS_AS(preset_config("fig9", {.kappa_mode = "medium"}), ConfigError);
  for (const auto& name : preset_names())
    for (const auto& v : preset_variants(name)) CHECK_NOTHROW(scenario_from_json(preset_config(name, {.variant = v})));
}

TEST_CASE("fig2 oscillates at g") {
  const RunResult r = run_scenario(scenario_from_json(preset_config("fig2")));
  CHECK(units::to_2pi_mhz(r.fitted_frequency) == doctest::Approx(14.0).epsilon(0.02));
  CHECK(r.health.ok());
}

TEST_CASE("fig9 strong cavity emits at most two photons") {
  const RunResult r = run_scenario(scenario_from_json(preset_config("fig9", {.kappa_mode = "strong"})));
  CHECK(r.efficiency > 0.5);
  CHECK(r.efficiency <= 2.0);
  CHECK(r.health.ok());
}

TEST_CASE("emission peaks earlier and higher with more atoms") {
  double prev_t = INFINITY, prev_peak = 0.0;
  for (int n : {1, 2, 3}) {
    const RunResult r = run_scenario(scenario_from_json(preset_config("fig4", {.n_atoms = n})));
    const auto& rate = r.series.rate;
    const auto it = std::max_element(rate.begin(), rate.end());
    const double t = r.series.times[it - rate.begin()];
    CHECK(t <= prev_t);
    CHECK(*it > prev_peak);
    prev_t = t;
    prev_peak = *it;
  }
}

TEST_CASE("sweeps") {
  json cfg = {{"base", preset_config("fig7")}, {"sweep", {{"axis", "n_atoms"}, {"values", {2}}}}};
  const SweepSpec one = sweep_from_json(cfg);
  const auto rows = run_sweep(one);
  REQUIRE(rows.size() == 1);
  json base2 = preset_config("fig7", {.n_atoms = 2});
  CHECK(rows[0].efficiency == run_scenario(scenario_from_json(base2)).efficiency);

  json c2 = {{"base", preset_config("fig6")},
             {"sweep", {{"axis", "cooperativity"}, {"values", {0.5, 2.0, 8.0}}, {"workers", 3}}}};
  SweepSpec par = sweep_from_json(c2);
  SweepSpec ser = par;
  ser.workers = 1;
  const auto a = run_sweep(par), b = run_sweep(ser);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].efficiency == b[i].efficiency);
    CHECK(a[i].cooperativity == doctest::Approx(c2["sweep"]["values"][i].get<double>()));
  }

  json bad = c2;
  bad["sweep"]["axis"] = "temperature";
  CHECK_THROWS_AS(sweep_from_json(bad), ConfigError);
}

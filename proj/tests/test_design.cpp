#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rydcav/design.hpp"
#include "rydcav/error.hpp"
#include "rydcav/presets.hpp"
#include "rydcav/scenario.hpp"
#include "rydcav/units.hpp"

using namespace rydcav;
using namespace rydcav::design;
constexpr double pi = std::numbers::pi;

TEST_CASE("finesse of the reference mirrors") {
  CHECK(finesse(0.999985, 0.99985) == doctest::Approx(3.8e4).epsilon(0.01));
  CHECK_THROWS_AS(finesse(1.0, 1.0), SingularError);
}

TEST_CASE("reference cavity") {
  const CavityGeometry g;
  const CavityDerived d = cavity_derived(g);
  CHECK(d.waist * 1e6 == doctest::Approx(14.0).epsilon(0.02));

  // g from the single-photon field amplitude sqrt(hbar w / (2 eps0 V))
  const double w = 2.0 * pi * kSpeedOfLight / g.wavelength;
  const double e_field = std::sqrt(kHbar * w / (2.0 * kEpsilon0 * d.mode_volume));
  CHECK(d.g == doctest::Approx(g.dipole * e_field / kHbar).epsilon(1e-12));
  CHECK(d.g / (2.0 * pi * 1e6) == doctest::Approx(50.0).epsilon(0.1));

  // Purcell factor via the quality factor Q = 2 F L / lambda
  const double q = 2.0 * d.finesse * g.length / g.wavelength;
  const double fp = 3.0 * q * std::pow(g.wavelength, 3) / (4.0 * pi * pi * d.mode_volume);
  CHECK(d.purcell == doctest::Approx(fp).epsilon(1e-12));
  CHECK(d.gamma_p == doctest::Approx(d.purcell * g.gamma_0));
  CHECK(d.cooperativity == doctest::Approx(d.purcell / 2.0));

  CHECK(d.kappa / (2.0 * pi * 1e6) == doctest::Approx(72.6).epsilon(0.1));
}

TEST_CASE("kappa scaling") {
  CavityGeometry g;
  const double k0 = kappa_from_finesse(g);
  g.length *= 2.0;
  CHECK(kappa_from_finesse(g) == doctest::Approx(k0 / 2.0));
  CavityGeometry h;
  const double f0 = finesse(h.r1, h.r2);
  h.r1 = 1.0 - (1.0 - h.r1) / 2.0;
  h.r2 = 1.0 - (1.0 - h.r2) / 2.0;
  CHECK(finesse(h.r1, h.r2) == doctest::Approx(2.0 * f0));
  CHECK(kappa_from_finesse(h) == doctest::Approx(k0 / 2.0));
}

TEST_CASE("geometry trends and positivity") {
  double prev_g = INFINITY;
  for (double l : {20e-6, 50e-6, 100e-6, 300e-6, 1e-3}) {
    CavityGeometry g;
    g.length = l;
    const CavityDerived d = cavity_derived(g);
    CHECK(d.g < prev_g);
    prev_g = d.g;
    for (double v : {d.waist, d.mode_volume, d.g, d.finesse, d.purcell, d.gamma_p, d.cooperativity, d.kappa})
      CHECK(v > 0.0);
  }
  CavityGeometry a, b;
  b.mirror_radius = 50e-3;
  CHECK(mode_volume(b) > mode_volume(a));
  CHECK(purcell_factor(b) < purcell_factor(a));

  CavityGeometry bad;
  bad.length = 2.0 * bad.mirror_radius;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("blockade shift") {
  const double target = 2.0 * pi * 220e6;
  const double c6 = calibrate_cp(target, 6.3e-6, 6);
  CHECK(blockade_shift({c6, 6, 6.3e-6}) == doctest::Approx(target));
  CHECK(blockade_shift({c6, 6, 12.6e-6}) == doctest::Approx(target / 64.0));
  CHECK(blockade_shift({c6, 6, 1.0}) < 1e-20 * target);
  const double c3 = calibrate_cp(target, 6.3e-6, 3);
  CHECK(blockade_shift({c3, 3, 12.6e-6}) == doctest::Approx(target / 8.0));
  CHECK_THROWS_AS(blockade_shift({c6, 6, 0.0}), SingularError);
  CHECK_THROWS_AS(blockade_shift({c6, 4, 1e-6}), DomainError);
}

TEST_CASE("derived numbers feed a valid simulation config") {
  const CavityGeometry g;
  const json d = design_json(g);
  json cfg = preset_config("fig7");
  cfg["system"]["g_2pi_mhz"] = d["g_2pi_mhz"];
  cfg["system"]["kappa_2pi_mhz"] = d["kappa_2pi_mhz"];
  const Scenario s = scenario_from_json(cfg);
  CHECK(s.system.g == doctest::Approx(units::from_rad_per_s(coupling_g(g))).epsilon(1e-12));
  CHECK(s.system.kappa == doctest::Approx(units::from_rad_per_s(kappa_from_finesse(g))).epsilon(1e-12));

  json pc = preset_config("fig5", {.variant = "purcell"});
  pc["system"]["gamma_p_2pi_mhz"] = d["gamma_p_2pi_mhz"];
  CHECK(scenario_from_json(pc).system.gamma_p ==
        doctest::Approx(units::from_rad_per_s(cavity_derived(g).gamma_p)).epsilon(1e-12));
}

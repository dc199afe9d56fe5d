#include "rydcav/presets.hpp"

#include <numbers>

#include "rydcav/design.hpp"
#include "rydcav/error.hpp"
#include "rydcav/units.hpp"

namespace rydcav {
namespace {

constexpr double kPi = std::numbers::pi;

json pulse_area(double area, double t0, double tau, const char* stage = "direct") {
  return {{"area_rad", area}, {"t0_us", t0}, {"tau_us", tau}, {"stage", stage}};
}

json pulse_amp(double amp_2pi_mhz, double t0, double tau, const char* stage = "direct") {
  return {{"amplitude_2pi_mhz", amp_2pi_mhz}, {"t0_us", t0}, {"tau_us", tau}, {"stage", stage}};
}

json fig2_system(int n) {
  return {{"n_atoms", n},
          {"g_2pi_mhz", 14.0},
          {"kappa_2pi_mhz", 1.4},
          {"gamma_r_2pi_khz", 1.4},
          {"gamma_perp_2pi_mhz", 0.0},
          {"gamma_0_2pi_mhz", 6.0},
          {"delta_c_2pi_mhz", 0.0},
          {"delta_s_2pi_mhz", 110.0},
          {"delta_r_2pi_mhz", 220.0},
          {"gamma_s_2pi_mhz", 6.0}};
}

// Single excitation: S pi-pulse on G0 -> R0, then a short Omega pi-pulse R0 -> E0.
json single_excitation(const std::string& name, json system, double t_end, double omega_tau, double omega_t0) {
  return {{"name", name},
          {"system", std::move(system)},
          {"chirp", {{"shape", "constant"}, {"start_2pi_mhz", -110.0}}},
          {"pulses",
           {{"mode", "effective"},
            {"s", json::array({pulse_area(kPi, 0.4, 0.05, "first")})},
            {"omega", json::array({pulse_area(kPi, omega_t0, omega_tau)})}}},
          {"integrator", {{"dt_us", 1e-4}, {"stride", 10}, {"t_end_us", t_end}}},
          {"analysis", {{"fit_t_min_us", omega_t0 + 8.0 * omega_tau}}}};
}

int atoms_or(const PresetOptions& o, int def) {
  const int n = o.n_atoms.value_or(def);
  if (n < 1) throw ConfigError("atom count must be at least 1", "--n");
  return n;
}

double kappa_for(const PresetOptions& o, const std::string& def) {
  const std::string m = o.kappa_mode.empty() ? def : o.kappa_mode;
  if (m == "weak") return 72.6;
  if (m == "strong") return 8.0;
  throw ConfigError("kappa mode must be weak or strong", "--kappa-mode");
}

void reject_variant(const std::string& name, const PresetOptions& o) {
  if (!o.variant.empty()) throw ConfigError("preset " + name + " has no variants", "--variant");
}

// Two excitations. S1 pi-pulse at Delta = -Delta_s puts the pair in R0; the
// detuning then ramps up through the R0 <-> RR0 resonance (Delta = 0) while a
// strong S pulse is on, which carries R0 adiabatically into RR0. The ramp
// tops out at +55 and settles at -55, where RR0 <-> ER0 is resonant for the
// Omega pulse that hands the excitations to the cavity.
json two_excitation(const std::string& name, int n, double kappa, double gamma_perp) {
  return {{"name", name},
          {"system",
           {{"n_atoms", n},
            {"g_2pi_mhz", 50.0},
            {"kappa_2pi_mhz", kappa},
            {"gamma_r_2pi_khz", 1.4},
            {"gamma_perp_2pi_mhz", gamma_perp},
            {"gamma_0_2pi_mhz", 6.0},
            {"delta_c_2pi_mhz", 0.0},
            {"delta_s_2pi_mhz", 110.0},
            {"delta_r_2pi_mhz", 220.0},
            {"gamma_s_2pi_mhz", 6.0}}},
          {"chirp",
           {{"shape", "tanh-window"},
            {"start_2pi_mhz", -110.0},
            {"end_2pi_mhz", 55.0},
            {"t_c_us", 0.074},
            {"w_us", 0.015},
            {"t_off_us", 0.1162},
            {"w_off_us", 0.005},
            {"settle_2pi_mhz", -55.0}}},
          {"pulses",
           {{"mode", "effective"},
            {"s", json::array({pulse_area(kPi, 0.032, 0.003, "first"), pulse_amp(300.0, 0.0842, 0.006)})},
            {"omega", json::array({pulse_amp(60.0, 0.1262, 0.003)})}}},
          {"integrator", {{"dt_us", 4e-5}, {"stride", 20}, {"t_end_us", 0.35}}}};
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig9", "fig10", "fig11", "fig12"};
}

std::vector<std::string> preset_variants(const std::string& name) {
  if (name == "fig2") return {"", "lossy"};
  if (name == "fig3") {
    std::vector<std::string> v;
    for (const char* k : {"k0.1", "k0.2", "k0.3"})
      for (const char* d : {"dc0", "dc0.3"}) v.push_back(std::string(k) + "-" + d);
    return v;
  }
  if (name == "fig5") return {"purcell", "full"};
  if (name == "fig12") return {"", "gperp0"};
  return {""};
}

json preset_config(const std::string& name, const PresetOptions& o) {
  if (name == "fig2") {
    const int n = atoms_or(o, 1);
    json sys = fig2_system(n);
    if (o.variant == "lossy") sys["gamma_perp_2pi_mhz"] = 3.0;
    else if (!o.variant.empty()) throw ConfigError("fig2 variants: lossy", "--variant");
    return single_excitation(o.variant.empty() ? "fig2" : "fig2-lossy", sys, 1.6, 0.002, 0.8);
  }
  if (name == "fig3") {
    const int n = atoms_or(o, 1);
    const std::string v = o.variant.empty() ? "k0.1-dc0" : o.variant;
    json sys = fig2_system(n);
    const auto dash = v.find('-');
    const std::string k = v.substr(0, dash), d = dash == std::string::npos ? "dc0" : v.substr(dash + 1);
    if (k == "k0.1") sys["kappa_2pi_mhz"] = 1.4;
    else if (k == "k0.2") sys["kappa_2pi_mhz"] = 2.85;
    else if (k == "k0.3") sys["kappa_2pi_mhz"] = 4.3;
    else throw ConfigError("fig3 variants: k{0.1,0.2,0.3}-dc{0,0.3}", "--variant");
    if (d == "dc0") sys["delta_c_2pi_mhz"] = 0.0;
    else if (d == "dc0.3") sys["delta_c_2pi_mhz"] = 4.3;
    else throw ConfigError("fig3 variants: k{0.1,0.2,0.3}-dc{0,0.3}", "--variant");
    return single_excitation("fig3-" + v, sys, 1.6, 0.002, 0.8);
  }
  if (name == "fig4") {
    reject_variant(name, o);
    json sys = fig2_system(atoms_or(o, 1));
    sys["gamma_perp_2pi_mhz"] = 3.0;
    return single_excitation("fig4", sys, 1.6, 0.002, 0.8);
  }
  if (name == "fig5" || name == "fig7") {
    json sys = fig2_system(atoms_or(o, 1));
    sys["g_2pi_mhz"] = 50.0;
    sys["gamma_perp_2pi_mhz"] = 3.0;
    std::string label = name;
    if (name == "fig5") {
      sys["kappa_2pi_mhz"] = 72.6;
      const std::string v = o.variant.empty() ? "full" : o.variant;
      if (v == "purcell") {
        // Gamma_p = F_p Gamma_0 with F_p = g^2 / (kappa Gamma_perp)
        const double fp = 50.0 * 50.0 / (72.6 * 3.0);
        sys["coupling_mode"] = "purcell";
        sys["gamma_p_2pi_mhz"] = fp * 6.0;
        sys["g_2pi_mhz"] = 0.0;
      } else if (v != "full") {
        throw ConfigError("fig5 variants: purcell, full", "--variant");
      }
      label += "-" + v;
    } else {
      reject_variant(name, o);
      sys["kappa_2pi_mhz"] = kappa_for(o, "weak");
      label += o.kappa_mode.empty() ? "-weak" : "-" + o.kappa_mode;
    }
    json cfg = single_excitation(label, sys, 1.2, 0.02, 0.6);
    cfg["pulses"]["omega"] = json::array({pulse_amp(40.0, 0.6, 0.02)});
    cfg["analysis"]["fit_t_min_us"] = 0.0;
    return cfg;
  }
  if (name == "fig6") {
    reject_variant(name, o);
    design::CavityGeometry geo;
    geo.length = 300e-6;
    geo.mirror_radius = 0.1;
    json sys = fig2_system(atoms_or(o, 1));
    sys["g_2pi_mhz"] = design::coupling_g(geo) / units::kTwoPi / 1e6;
    sys["kappa_2pi_mhz"] = design::kappa_from_finesse(geo) / units::kTwoPi / 1e6;
    sys["gamma_perp_2pi_mhz"] = 3.0;
    json cfg = single_excitation("fig6", sys, 4.0, 0.02, 0.6);
    cfg["pulses"]["omega"] = json::array({pulse_amp(40.0, 0.6, 0.02)});
    cfg["integrator"]["stride"] = 50;
    cfg["analysis"]["fit_t_min_us"] = 0.0;
    return cfg;
  }
  if (name == "fig9" || name == "fig11" || name == "fig12") {
    const double kappa = kappa_for(o, "weak");
    double gperp = 3.0;
    if (name == "fig12" && o.variant == "gperp0") gperp = 0.0;
    else if (!o.variant.empty()) throw ConfigError(name + " variants: " + (name == "fig12" ? "gperp0" : "none"), "--variant");
    const int n = atoms_or(o, 2);
    std::string label = name + (o.kappa_mode.empty() ? "-weak" : "-" + o.kappa_mode);
    if (!o.variant.empty()) label += "-" + o.variant;
    return two_excitation(label, n, kappa, gperp);
  }
  if (name == "fig10") {
    reject_variant(name, o);
    return two_excitation(std::string("fig10") + (o.kappa_mode.empty() ? "-weak" : "-" + o.kappa_mode),
                          atoms_or(o, 3), kappa_for(o, "weak"), 3.0);
  }
  throw ConfigError("unknown preset '" + name + "'", "--preset");
}

std::vector<std::string> sweep_preset_names() { return {"fig6-long", "fig6-atoms"}; }

json sweep_preset_config(const std::string& name) {
  if (name == "fig6-long") {
    return {{"base", preset_config("fig6")},
            {"sweep", {{"axis", "cooperativity"}, {"values", {0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0}}}}};
  }
  if (name == "fig6-atoms") {
    PresetOptions o;
    o.kappa_mode = "weak";
    return {{"base", preset_config("fig7", o)}, {"sweep", {{"axis", "n_atoms"}, {"values", {1, 2, 3}}}}};
  }
  throw ConfigError("unknown sweep preset '" + name + "'", "--preset");
}

}  // namespace rydcav

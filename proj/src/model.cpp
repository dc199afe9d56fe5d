#include "rydcav/model.hpp"

#include <cmath>
#include <numbers>

#include "rydcav/error.hpp"

namespace rydcav {

void SystemParams::validate() const {
  if (n_atoms < 1) throw ConfigError("must be at least 1", "system.n_atoms");
  const std::pair<double, const char*> rates[] = {
      {kappa, "system.kappa_2pi_mhz"},        {gamma_r, "system.gamma_r_2pi_khz"},
      {gamma_perp, "system.gamma_perp_2pi_mhz"}, {gamma_0, "system.gamma_0_2pi_mhz"},
      {gamma_p, "system.gamma_p_2pi_mhz"},    {deph_r, "dephasing.gamma_r_khz"},
      {deph_rr, "dephasing.gamma_rr_khz"},    {gamma_s, "system.gamma_s_2pi_mhz"},
  };
  for (const auto& [v, path] : rates) {
    if (!std::isfinite(v) || v < 0.0) throw ConfigError("rate must be finite and non-negative", path);
  }
  if (!std::isfinite(g) || !std::isfinite(delta_c) || !std::isfinite(delta_r))
    throw ConfigError("non-finite coupling or detuning", "system");
  if (coupling == CouplingMode::Purcell && g != 0.0)
    throw ConfigError("purcell mode replaces the coherent coupling; set g to 0", "system.g_2pi_mhz");
}

namespace {

void couple(Mat& h, int a, int b, double v) {
  h(a, b) += v;
  h(b, a) += v;
}

double rt(double x) { return std::sqrt(x); }

}  // namespace

HamiltonianParts hamiltonian_parts(const SystemParams& p) {
  const double n = p.n_atoms;
  HamiltonianParts parts;
  parts.fixed.setZero();
  parts.detuning.setZero();
  parts.s1_unit.setZero();
  parts.s2_unit.setZero();
  parts.omega_unit.setZero();

  parts.detuning(R0, R0) = -1.0;
  couple(parts.s1_unit, G0, R0, 0.5);
  couple(parts.s2_unit, R0, RR0, 0.5);
  couple(parts.omega_unit, R0, E0, 0.5);
  couple(parts.omega_unit, R1, E1, 0.5);

  Mat& f = parts.fixed;
  f(E0, E0) = -p.delta_c;
  f(E1, E1) = -p.delta_c;
  if (p.n_atoms >= 2) {
    parts.detuning(RR0, RR0) = -2.0;
    couple(parts.omega_unit, EE0, ER0, 0.5 * std::numbers::sqrt2);
    couple(parts.omega_unit, ER0, RR0, 0.5 * std::numbers::sqrt2);
    f(ER0, ER0) = -p.delta_c;
    f(EE0, EE0) = -2.0 * p.delta_c;
  }
  if (p.coupling == CouplingMode::Coherent) {
    const double g2 = p.ladder == Ladder::Bosonic ? std::numbers::sqrt2 : 1.0;
    couple(f, G1, E0, p.g / 2.0 * rt(n));
    couple(f, G2, E1, p.g / 2.0 * rt(n) * g2);
    couple(f, R1, ER0, p.g / 2.0 * rt(n - 1.0));
    couple(f, E1, EE0, p.g / 2.0 * rt(2.0 * (n - 1.0)));
  }
  if (p.n_atoms >= 2) f(RR0, RR0) += p.delta_r / 2.0;
  return parts;
}

Mat assemble(const HamiltonianParts& parts, const SystemParams& p, const PulseSchedule& s, double t) {
  const double delta = s.Delta(t);
  const EffectiveRabi r = effective_from_s(s.S(t), s.delta_s, delta, p.n_atoms);
  Mat h = parts.fixed;
  h.noalias() += (delta + s.delta_s) * parts.detuning;
  if (r.s1 != 0.0) h.noalias() += r.s1 * parts.s1_unit;
  if (r.s2 != 0.0) h.noalias() += r.s2 * parts.s2_unit;
  const double om = s.Omega(t);
  if (om != 0.0) h.noalias() += om * parts.omega_unit;
  return h;
}

Mat build_h1(const SystemParams& p, const PulseSchedule& s, double t) {
  const double delta = s.Delta(t);
  const EffectiveRabi r = effective_from_s(s.S(t), s.delta_s, delta, p.n_atoms);
  Mat h = Mat::Zero();
  h(R0, R0) = -(delta + s.delta_s);
  if (p.n_atoms >= 2) h(RR0, RR0) = -2.0 * (delta + s.delta_s);
  couple(h, G0, R0, r.s1 / 2.0);
  couple(h, R0, RR0, r.s2 / 2.0);
  return h;
}

Mat build_h2(const SystemParams& p, const PulseSchedule& s, double t) {
  const double n = p.n_atoms;
  const double om = s.Omega(t) / 2.0;
  Mat h = Mat::Zero();
  h(E0, E0) = -p.delta_c;
  h(E1, E1) = -p.delta_c;
  couple(h, R0, E0, om);
  couple(h, R1, E1, om);
  if (p.n_atoms >= 2) {
    h(ER0, ER0) = -p.delta_c;
    h(EE0, EE0) = -2.0 * p.delta_c;
    couple(h, EE0, ER0, std::numbers::sqrt2 * om);
    couple(h, ER0, RR0, std::numbers::sqrt2 * om);
  }
  if (p.coupling == CouplingMode::Coherent) {
    const double gh = p.g / 2.0;
    const double g2 = p.ladder == Ladder::Bosonic ? std::numbers::sqrt2 : 1.0;
    couple(h, G1, E0, gh * rt(n));
    couple(h, G2, E1, gh * rt(n) * g2);
    couple(h, R1, ER0, gh * rt(n - 1.0));
    couple(h, E1, EE0, gh * rt(2.0 * (n - 1.0)));
  }
  return h;
}

Mat build_haa(const SystemParams& p) {
  Mat h = Mat::Zero();
  if (p.n_atoms >= 2) h(RR0, RR0) = p.delta_r / 2.0;
  return h;
}

Mat build_total(const SystemParams& p, const PulseSchedule& s, double t) {
  return build_h1(p, s, t) + build_h2(p, s, t) + build_haa(p);
}

}  // namespace rydcav

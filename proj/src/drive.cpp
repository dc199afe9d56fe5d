#include "rydcav/drive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rydcav/error.hpp"

namespace rydcav {

double SechPulse::operator()(double t) const {
  const double x = (t - t0) / tau;
  if (std::abs(x) > 700.0) return 0.0;
  return amplitude / std::cosh(x);
}

void SechPulse::validate() const {
  if (!(tau > 0.0)) throw ConfigError("pulse width must be positive", "tau_us");
  if (!(amplitude >= 0.0)) throw ConfigError("pulse amplitude must be non-negative", "amplitude");
  if (!std::isfinite(t0)) throw ConfigError("pulse center must be finite", "t0_us");
}

double PulseTrain::operator()(double t) const {
  double v = 0.0;
  for (const auto& p : pulses) v += p(t);
  return v;
}

double PulseTrain::peak_time() const {
  if (pulses.empty()) return 0.0;
  return std::max_element(pulses.begin(), pulses.end(),
                          [](const SechPulse& a, const SechPulse& b) { return a.amplitude < b.amplitude; })
      ->t0;
}

double ChirpSchedule::operator()(double t) const {
  switch (shape) {
    case ChirpShape::Constant:
      return start;
    case ChirpShape::TanhRamp:
      return start + (end - start) * 0.5 * (1.0 + std::tanh((t - t_c) / w));
    case ChirpShape::TanhWindow:
      return start + (end - start) * 0.5 * (1.0 + std::tanh((t - t_c) / w)) +
             (settle - end) * 0.5 * (1.0 + std::tanh((t - t_off) / w_off));
  }
  return start;
}

void ChirpSchedule::validate() const {
  if (shape != ChirpShape::Constant && !(w > 0.0))
    throw ConfigError("ramp width must be positive", "chirp.w_us");
  if (shape == ChirpShape::TanhWindow && !(t_off > t_c))
    throw ConfigError("window must close after it opens", "chirp.t_off_us");
  if (shape == ChirpShape::TanhWindow && !(w_off > 0.0))
    throw ConfigError("ramp width must be positive", "chirp.w_off_us");
}

EffectiveRabi effective_from_s(double s, double delta_s, double delta_t, int n_atoms) {
  if (delta_s == 0.0) throw SingularError("delta_s must be nonzero");
  if (n_atoms < 1) throw DomainError("n_atoms must be at least 1");
  EffectiveRabi r{s, std::sqrt(static_cast<double>(n_atoms)) * s / 2.0, 0.0};
  if (n_atoms >= 2) {
    const double den = 2.0 + delta_t / delta_s;
    if (std::abs(den) < 1e-12) throw SingularError("2 + delta/delta_s vanishes");
    r.s2 = std::sqrt(static_cast<double>(n_atoms - 1)) * s / (std::numbers::sqrt2 * den);
  }
  return r;
}

EffectiveRabi effective_rabi(double p1, double p2, double delta_s, double delta_t, int n_atoms) {
  if (delta_s == 0.0) throw SingularError("delta_s must be nonzero");
  return effective_from_s(p1 * p2 / delta_s, delta_s, delta_t, n_atoms);
}

double PulseSchedule::S(double t) const {
  if (mode == DriveMode::Effective) return s(t);
  return p1(t) * p2(t) / delta_s;
}

void PulseSchedule::validate() const {
  if (delta_s == 0.0) throw ConfigError("delta_s must be nonzero", "system.delta_s_2pi_mhz");
  for (const auto* train : {&p1, &p2, &s, &omega})
    for (const auto& p : train->pulses) p.validate();
  chirp.validate();
  if (mode == DriveMode::Raw && style == PrepStyle::Stirap && !p1.empty() && !p2.empty() &&
      !(p2.peak_time() < p1.peak_time()))
    throw ConfigError("STIRAP requires the Stokes pulse (p2) before the pump (p1)", "pulses.p2.t0_us");
}

double solve_pi_amplitude(double tau, double area, int n_atoms, PiStage stage, double delta_ratio) {
  if (!(tau > 0.0)) throw DomainError("tau must be positive");
  if (!(area > 0.0)) throw DomainError("target area must be positive");
  const double a = area / (std::numbers::pi * tau);
  switch (stage) {
    case PiStage::Direct:
      return a;
    case PiStage::First:
      return 2.0 * a / std::sqrt(static_cast<double>(n_atoms));
    case PiStage::Second: {
      if (n_atoms < 2) throw DomainError("second stage needs at least two atoms");
      const double den = 2.0 + delta_ratio;
      if (std::abs(den) < 1e-12) throw SingularError("2 + delta/delta_s vanishes");
      return a * std::numbers::sqrt2 * std::abs(den) / std::sqrt(static_cast<double>(n_atoms - 1));
    }
  }
  return a;
}

double blockade_margin(const PulseSchedule& sched, double delta_r, double gamma_s, double t0,
                       double t1, int samples) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = t0 + (t1 - t0) * k / std::max(samples - 1, 1);
    double p1, p2;
    if (sched.mode == DriveMode::Raw) {
      p1 = sched.p1(t);
      p2 = sched.p2(t);
    } else {
      p1 = p2 = std::sqrt(std::abs(sched.s(t) * sched.delta_s));
    }
    const double num = p1 * p1 + p2 * p2;
    if (num == 0.0) continue;
    const double den = std::sqrt(2.0 * p1 * p1 + gamma_s * gamma_s / 4.0);
    if (den == 0.0) throw SingularError("blockade condition degenerate: P1 and Gamma_s both vanish");
    worst = std::max(worst, num / den);
  }
  if (worst == 0.0) return std::numeric_limits<double>::infinity();
  return delta_r / worst;
}

}  // namespace rydcav

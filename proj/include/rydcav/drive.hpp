#pragma once

#include <vector>

namespace rydcav {

struct SechPulse {
  double amplitude = 0.0;  // rad/us
  double t0 = 0.0;         // us
  double tau = 0.05;       // us

  double operator()(double t) const;
  void validate() const;
};

// Sum of sech pulses; an empty train is identically zero.
struct PulseTrain {
  std::vector<SechPulse> pulses;

  double operator()(double t) const;
  bool empty() const { return pulses.empty(); }
  double peak_time() const;  // center of the largest pulse
};

enum class ChirpShape { Constant, TanhRamp, TanhWindow };

// Rydberg detuning Delta(t).
//   Constant:   start
//   TanhRamp:   start -> end centred at t_c
//   TanhWindow: start -> end at t_c, end -> settle at t_off
struct ChirpSchedule {
  ChirpShape shape = ChirpShape::Constant;
  double start = 0.0;
  double end = 0.0;
  double t_c = 0.0;
  double w = 0.01;
  double t_off = 0.0;
  double settle = 0.0;
  double w_off = 0.01;

  double operator()(double t) const;
  void validate() const;
};

struct EffectiveRabi {
  double s, s1, s2;
};

// S = P1 P2 / ds, S1 = sqrt(N) S / 2, S2 = sqrt(N-1) S / (sqrt2 (2 + dt/ds)).
EffectiveRabi effective_rabi(double p1, double p2, double delta_s, double delta_t, int n_atoms);
EffectiveRabi effective_from_s(double s, double delta_s, double delta_t, int n_atoms);

enum class DriveMode { Raw, Effective };
enum class PrepStyle { SimultaneousPi, Stirap };

struct PulseSchedule {
  DriveMode mode = DriveMode::Effective;
  PrepStyle style = PrepStyle::SimultaneousPi;
  PulseTrain p1, p2;  // raw mode
  PulseTrain s;       // effective mode
  PulseTrain omega;
  double delta_s = 0.0;
  ChirpSchedule chirp;

  double S(double t) const;
  double Omega(double t) const { return omega(t); }
  double Delta(double t) const { return chirp(t); }
  void validate() const;
};

enum class PiStage { Direct, First, Second };

// Sech amplitude whose stage Rabi frequency integrates to `area`.
// Direct: the envelope itself. First: S1 = sqrt(N) S / 2.
// Second: S2 at a fixed detuning ratio delta/delta_s.
double solve_pi_amplitude(double tau, double area, int n_atoms, PiStage stage = PiStage::Direct,
                          double delta_ratio = -1.0);

// Delta_R / max_t (P1^2 + P2^2) / sqrt(2 P1^2 + Gamma_s^2 / 4) sampled on
// [t0, t1]. Effective schedules are read as P1 = P2 = sqrt(|S| delta_s).
// Returns +inf when no light is on.
double blockade_margin(const PulseSchedule& sched, double delta_r, double gamma_s, double t0,
                       double t1, int samples = 4001);

}  // namespace rydcav

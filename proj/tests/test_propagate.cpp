#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rydcav/error.hpp"
#include "rydcav/presets.hpp"
#include "rydcav/propagate.hpp"
#include "rydcav/scenario.hpp"
#include "rydcav/units.hpp"

using namespace rydcav;
using units::from_2pi_mhz;

namespace {

PulseSchedule quiet() {
  PulseSchedule s;
  s.delta_s = from_2pi_mhz(110.0);
  s.chirp.start = -s.delta_s;
  return s;
}

IntegratorConfig window(double t_end, double dt = 1e-4, int stride = 10) {
  IntegratorConfig c;
  c.dt = dt;
  c.stride = stride;
  c.t_end = t_end;
  return c;
}

Eigen::MatrixXcd final_state(const LindbladGenerator& gen, const Mat& rho0, IntegratorConfig cfg) {
  cfg.stride = 1 << 30;
  Eigen::MatrixXcd last;
  integrate(gen, Eigen::MatrixXcd(rho0), cfg, [&](double, const Eigen::MatrixXcd& r) { last = r; });
  return last;
}

}  // namespace

TEST_CASE("zero generator is stationary") {
  SystemParams p;
  std::mt19937 rng(3);
  const Mat rho0 = testing::random_density(rng);
  const Trajectory tr = run(p, quiet(), window(0.5), rho0);
  for (const Mat& r : tr.states) CHECK(r == rho0);
  const HealthReport h = checkpoint_health(tr);
  CHECK(h.max_hermiticity_error <= 1e-15);
  CHECK(h.max_trace_error <= 1e-15);
  CHECK(h.ok());
}

TEST_CASE("cavity decay of one photon") {
  SystemParams p;
  p.kappa = from_2pi_mhz(1.4);
  const Trajectory tr = run(p, quiet(), window(1.0), pure_state(G1));
  double worst = 0.0;
  for (std::size_t i = 0; i < tr.times.size(); ++i)
    worst = std::max(worst, std::abs(tr.states[i](G1, G1).real() - std::exp(-2.0 * p.kappa * tr.times[i])));
  CHECK(worst < 1e-8);
}

TEST_CASE("vacuum Rabi oscillation") {
  SystemParams p;
  p.g = from_2pi_mhz(14.0);
  const Trajectory tr = run(p, quiet(), window(0.5), pure_state(E0));
  double worst = 0.0;
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    const double s = std::sin(p.g * tr.times[i] / 2.0);
    worst = std::max(worst, std::abs(tr.states[i](G1, G1).real() - s * s));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("RK4 converges at fourth order on fig2") {
  const Scenario sc = scenario_from_json(preset_config("fig2"));
  const LindbladGenerator gen = collective_generator(sc.system, sc.schedule);
  IntegratorConfig cfg = sc.integrator;
  const double h = 2e-4;
  cfg.dt = h / 8.0;
  const Eigen::MatrixXcd ref = final_state(gen, pure_state(G0), cfg);
  cfg.dt = h;
  const double e1 = testing::max_abs(final_state(gen, pure_state(G0), cfg) - ref);
  cfg.dt = h / 2.0;
  const double e2 = testing::max_abs(final_state(gen, pure_state(G0), cfg) - ref);
  const double order = std::log2(e1 / e2);
  INFO("errors " << e1 << " " << e2);
  CHECK(order >= 3.7);
}

TEST_CASE("purity bounds") {
  SystemParams p;
  p.n_atoms = 2;
  p.g = from_2pi_mhz(14.0);
  p.delta_r = from_2pi_mhz(220.0);
  PulseSchedule s = quiet();
  s.s.pulses = {{solve_pi_amplitude(0.05, std::numbers::pi, 2, PiStage::First), 0.2, 0.05}};
  s.omega.pulses = {{solve_pi_amplitude(0.01, std::numbers::pi, 2), 0.5, 0.01}};
  const Trajectory unitary = run(p, s, window(0.8), pure_state(G0));
  for (const Mat& r : unitary.states) CHECK(std::abs((r * r).trace().real() - 1.0) < 1e-9);

  p.kappa = from_2pi_mhz(1.4);
  p.gamma_perp = from_2pi_mhz(3.0);
  const Trajectory open = run(p, s, window(0.8), pure_state(G0));
  for (const Mat& r : open.states) {
    CHECK((r * r).trace().real() <= 1.0 + 1e-9);
    CHECK(std::abs(r.trace() - 1.0) < 1e-9);
  }
  CHECK(checkpoint_health(open).ok());
}

TEST_CASE("health detector flags a corrupted sample") {
  SystemParams p;
  p.kappa = 1.0;
  Trajectory tr = run(p, quiet(), window(0.1), pure_state(G1));
  CHECK(checkpoint_health(tr).ok());
  Mat bad = tr.states[3];
  bad(G0, G1) += 0.01;
  tr.health[3] = health_of(bad);
  const HealthReport h = checkpoint_health(tr);
  CHECK_FALSE(h.ok());
  CHECK_FALSE(h.hermiticity_ok);
  bad = tr.states[3];
  bad(G0, G0) -= 0.5;
  tr.health[4] = health_of(bad);
  CHECK_FALSE(checkpoint_health(tr).trace_ok);
}

TEST_CASE("fig2 preset passes health checks") {
  const RunResult r = run_scenario(scenario_from_json(preset_config("fig2")));
  CHECK(r.health.ok());
}

TEST_CASE("observer sees first, strided and last samples") {
  SystemParams p;
  p.kappa = 1.0;
  const Trajectory tr = run(p, quiet(), window(0.0105, 1e-4, 10), pure_state(G1));
  CHECK(tr.times.front() == 0.0);
  CHECK(tr.times.back() == doctest::Approx(0.0105));
  CHECK(tr.times[1] == doctest::Approx(1e-3));
}

TEST_CASE("step size guard and divergence") {
  SystemParams p;
  p.g = from_2pi_mhz(100.0);
  CHECK_THROWS_AS(run(p, quiet(), window(0.1, 1e-3), pure_state(E0)), ConfigError);
  IntegratorConfig bad = window(0.1);
  bad.dt = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  const LindbladGenerator gen = collective_generator(p, quiet());
  IntegratorConfig huge = window(50.0, 0.5);
  CHECK_THROWS_AS(integrate(gen, Eigen::MatrixXcd(pure_state(E0)), huge, [](double, const Eigen::MatrixXcd&) {}),
                  DivergenceError);
}

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "rydcav/dissipation.hpp"
#include "rydcav/observables.hpp"
#include "rydcav/propagate.hpp"
#include "rydcav/units.hpp"

using namespace rydcav;
using units::from_2pi_mhz;

TEST_CASE("populations") {
  const RealVec p = populations(pure_state(G0));
  CHECK(p(G0) == 1.0);
  CHECK(p.sum() == 1.0);
  std::mt19937 rng(1);
  const Mat rho = testing::random_density(rng);
  CHECK(populations(rho).sum() == doctest::Approx(rho.trace().real()).epsilon(1e-14));
}

TEST_CASE("photon rate") {
  SystemParams p;
  p.kappa = from_2pi_mhz(1.4);
  const Mat proj = emission_projector(make_channels(p));
  CHECK(photon_rate(pure_state(G0), proj, p.kappa) == 0.0);
  CHECK(photon_rate(pure_state(G1), proj, p.kappa) == doctest::Approx(2.0 * from_2pi_mhz(1.4)));
}

TEST_CASE("cumulative trapezoid") {
  const std::vector<double> t{0.0, 1.0, 2.0, 4.0};
  const std::vector<double> y{0.0, 2.0, 2.0, 0.0};
  const auto c = cumulative_trapezoid(t, y);
  CHECK(c == std::vector<double>{0.0, 1.0, 3.0, 5.0});
}

TEST_CASE("emission efficiency limits") {
  PulseSchedule s;
  s.delta_s = from_2pi_mhz(110.0);
  s.chirp.start = -s.delta_s;
  IntegratorConfig cfg;
  cfg.dt = 1e-4;
  cfg.stride = 5;
  cfg.t_end = 2.0;

  SystemParams p;
  p.kappa = from_2pi_mhz(1.4);
  const Trajectory tr = run(p, s, cfg, pure_state(G1));
  CHECK(emission_efficiency(tr, make_channels(p)) == doctest::Approx(1.0).epsilon(1e-4));

  const ObservableSeries obs = observe(tr, p);
  for (std::size_t i = 1; i < obs.eff_cum.size(); ++i) CHECK(obs.eff_cum[i] >= obs.eff_cum[i - 1]);
  for (double r : obs.rate) CHECK(r >= 0.0);

  SystemParams q;
  q.g = from_2pi_mhz(14.0);
  CHECK(emission_efficiency(run(q, s, cfg, pure_state(E0)), make_channels(q)) == 0.0);
}

TEST_CASE("dipole correlation") {
  CHECK(std::abs(dipole_correlation(pure_state(EE0), 2).raw) < 1e-15);
  const DipoleCorrelation e = dipole_correlation(pure_state(E0), 2);
  CHECK(e.raw.real() == doctest::Approx(0.5));
  CHECK(std::abs(e.raw.imag()) < 1e-15);
  CHECK(e.normalized.real() == doctest::Approx(1.0));
  CHECK(std::abs(dipole_correlation(pure_state(G0), 2).raw) == 0.0);
  CHECK(dipole_correlation(pure_state(E0), 3).raw.real() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("dipole correlation matches collective matrix elements") {
  // rho = |psi><psi|, psi = a|E0> + b|G0>: only the E0 diagonal contributes,
  // and for N = 2, <D+_1 D-_2> = rho(E0,E0) / 2 + rho(ER0,ER0) * 0 + rho(E1,E1) / 2.
  Mat rho = Mat::Zero();
  rho(E0, E0) = 0.3;
  rho(E1, E1) = 0.2;
  rho(G0, G0) = 0.5;
  rho(G0, E0) = rho(E0, G0) = 0.1;
  CHECK(dipole_correlation(rho, 2).raw.real() == doctest::Approx(0.25));
}

TEST_CASE("log g2") {
  const LogG2 ee = log_g2(pure_state(EE0), 2);
  CHECK(ee.status == G2Status::Defined);
  CHECK(ee.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(log_g2(pure_state(E0), 2).status == G2Status::NegInfinity);
  CHECK(log_g2(pure_state(G0), 2).status == G2Status::Undefined);

  // collective closed form for a diagonal state
  Mat rho = Mat::Zero();
  rho(EE0, EE0) = 0.2;
  rho(ER0, ER0) = 0.3;
  rho(E0, E0) = 0.1;
  rho(G0, G0) = 0.4;
  const double ne = 0.2 + (0.3 + 0.1) / 2.0;
  CHECK(log_g2(rho, 2).value == doctest::Approx(std::log(0.2 / (ne * ne))).epsilon(1e-12));
}

TEST_CASE("entropies") {
  const Entropies pure = entropies(pure_state(RR0));
  CHECK(std::abs(pure.total) < 1e-9);
  CHECK(pure.araki_lieb_ok);

  const Mat mixed = Mat::Identity() / static_cast<double>(kDim);
  CHECK(entropies(mixed).total == doctest::Approx(std::log(11.0)).epsilon(1e-12));

  Eigen::Matrix<cplx, kDim, 1> psi = Eigen::Matrix<cplx, kDim, 1>::Zero();
  psi(E0) = psi(G1) = 1.0 / std::sqrt(2.0);
  const Mat bell = psi * psi.adjoint();
  const Entropies b = entropies(bell);
  CHECK(std::abs(b.total) < 1e-9);
  CHECK(b.atoms == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(b.photons == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  std::mt19937 rng(4);
  for (int k = 0; k < 50; ++k) {
    const Mat rho = testing::random_density(rng);
    const Entropies e = entropies(rho);
    CHECK(e.araki_lieb_ok);
    CHECK(reduced_atoms(rho).trace().real() == doctest::Approx(1.0));
    CHECK(reduced_photons(rho).trace().real() == doctest::Approx(1.0));
  }
}

TEST_CASE("pure states have equal subsystem entropies") {
  std::mt19937 rng(8);
  std::normal_distribution<double> n;
  for (int k = 0; k < 20; ++k) {
    Eigen::Matrix<cplx, kDim, 1> v;
    for (int i = 0; i < kDim; ++i) v(i) = {n(rng), n(rng)};
    v.normalize();
    const Entropies e = entropies(v * v.adjoint());
    CHECK(std::abs(e.total) < 1e-9);
    CHECK(e.atoms == doctest::Approx(e.photons).epsilon(1e-9));
  }
}

TEST_CASE("peak frequency fit") {
  std::vector<double> t, y;
  const double w = from_2pi_mhz(14.0);
  for (int i = 0; i <= 20000; ++i) {
    t.push_back(i * 1e-4);
    const double s = std::sin(w * t.back() / 2.0);
    y.push_back(std::exp(-t.back()) * s * s);
  }
  CHECK(fit_peak_frequency(t, y) == doctest::Approx(w).epsilon(2e-3));
  CHECK(fit_peak_frequency({0.0, 1.0}, {0.0, 1.0}) == 0.0);
}

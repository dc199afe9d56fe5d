#include "rydcav/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rydcav/error.hpp"

namespace rydcav {

RealVec populations(const Mat& rho) { return rho.diagonal().real(); }

double photon_rate(const Mat& rho, const Mat& projector, double kappa) {
  return 2.0 * kappa * (projector * rho).trace().real();
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t i = 1; i < t.size(); ++i) out[i] = out[i - 1] + 0.5 * (y[i] + y[i - 1]) * (t[i] - t[i - 1]);
  return out;
}

double emission_efficiency(const Trajectory& traj, const std::vector<CollapseChannel>& channels) {
  const Mat proj = emission_projector(channels);
  const double kappa = kappa_rate(channels);
  std::vector<double> r;
  r.reserve(traj.states.size());
  for (const auto& rho : traj.states) r.push_back(photon_rate(rho, proj, kappa));
  const auto c = cumulative_trapezoid(traj.times, r);
  return c.empty() ? 0.0 : c.back();
}

namespace {

Eigen::MatrixXcd product_rho(const Mat& rho, int n_atoms) {
  if (n_atoms != 2 && n_atoms != 3) throw UnsupportedError("dipole observables need 2 or 3 atoms");
  const Eigen::MatrixXcd u = collective_isometry(n_atoms);
  return u * rho * u.adjoint();
}

// <D+_i D-_j> in the product basis.
cplx flip_expectation(const Eigen::MatrixXcd& pr, const ProductSpace& ps, int i, int j) {
  cplx acc = 0.0;
  for (int b = 0; b < ps.dim; ++b) {
    if (i == j) {
      if (ps.level(b, i) == kE) acc += pr(b, b);
      continue;
    }
    if (ps.level(b, j) != kE || ps.level(b, i) != kG) continue;
    std::vector<int> lv(ps.n_atoms);
    for (int a = 0; a < ps.n_atoms; ++a) lv[a] = ps.level(b, a);
    lv[j] = kG;
    lv[i] = kE;
    const int a = ps.index(lv, ps.photons(b));
    acc += pr(b, a);  // rho_{b a} O_{a b}
  }
  return acc;
}

double pair_excitation(const Eigen::MatrixXcd& pr, const ProductSpace& ps, int i, int j) {
  double acc = 0.0;
  for (int b = 0; b < ps.dim; ++b)
    if (ps.level(b, i) == kE && ps.level(b, j) == kE) acc += pr(b, b).real();
  return acc;
}

}  // namespace

DipoleCorrelation dipole_correlation(const Mat& rho, int n_atoms) {
  const Eigen::MatrixXcd pr = product_rho(rho, n_atoms);
  const ProductSpace ps(n_atoms);
  DipoleCorrelation out{0.0, 0.0};
  int pairs = 0;
  for (int i = 0; i < n_atoms; ++i)
    for (int j = 0; j < n_atoms; ++j) {
      if (i == j) continue;
      const cplx c = flip_expectation(pr, ps, i, j);
      const double ni = flip_expectation(pr, ps, i, i).real();
      const double nj = flip_expectation(pr, ps, j, j).real();
      out.raw += c;
      if (ni > 1e-15 && nj > 1e-15) out.normalized += c / std::sqrt(ni * nj);
      ++pairs;
    }
  out.raw /= pairs;
  out.normalized /= pairs;
  return out;
}

// Excitation probabilities below this sit at the integrator's round-off level.
constexpr double kG2Floor = 1e-12;

LogG2 log_g2(const Mat& rho, int n_atoms) {
  const Eigen::MatrixXcd pr = product_rho(rho, n_atoms);
  const ProductSpace ps(n_atoms);
  double num = 0.0, den = 0.0;
  int pairs = 0;
  for (int i = 0; i < n_atoms; ++i)
    for (int j = i + 1; j < n_atoms; ++j) {
      const double ni = flip_expectation(pr, ps, i, i).real();
      const double nj = flip_expectation(pr, ps, j, j).real();
      if (ni <= kG2Floor || nj <= kG2Floor) return {G2Status::Undefined, std::numeric_limits<double>::quiet_NaN()};
      num += pair_excitation(pr, ps, i, j);
      den += ni * nj;
      ++pairs;
    }
  if (num <= 0.0) return {G2Status::NegInfinity, -std::numeric_limits<double>::infinity()};
  return {G2Status::Defined, std::log(num / den)};
}

double von_neumann(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()[i];
    if (l > 1e-14) s -= l * std::log(l);
  }
  return s;
}

namespace {

int atomic_slot(int index) { return static_cast<int>(state_of(index).atomic); }

}  // namespace

Eigen::MatrixXcd reduced_atoms(const Mat& rho) {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(7, 7);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (state_of(i).photons == state_of(j).photons) r(atomic_slot(i), atomic_slot(j)) += rho(i, j);
  return r;
}

Eigen::MatrixXcd reduced_photons(const Mat& rho) {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(3, 3);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (state_of(i).atomic == state_of(j).atomic) r(state_of(i).photons, state_of(j).photons) += rho(i, j);
  return r;
}

Entropies entropies(const Mat& rho) {
  Entropies e{};
  e.total = von_neumann(rho);
  e.atoms = von_neumann(reduced_atoms(rho));
  e.photons = von_neumann(reduced_photons(rho));
  e.araki_lieb_ok = std::abs(e.atoms - e.photons) <= e.total + 1e-9 && e.total <= e.atoms + e.photons + 1e-9;
  return e;
}

ObservableSeries observe(const Trajectory& traj, const SystemParams& p) {
  const auto channels = make_channels(p);
  const Mat proj = emission_projector(channels);
  const double kappa = kappa_rate(channels);
  const bool pairs = p.n_atoms == 2 || p.n_atoms == 3;
  ObservableSeries o;
  o.times = traj.times;
  for (const auto& rho : traj.states) {
    o.populations.push_back(populations(rho));
    o.rate.push_back(photon_rate(rho, proj, kappa));
    if (pairs) {
      o.mu12.push_back(dipole_correlation(rho, p.n_atoms));
      o.ln_g2.push_back(log_g2(rho, p.n_atoms));
    } else {
      o.mu12.push_back({0.0, 0.0});
      o.ln_g2.push_back({G2Status::Undefined, std::numeric_limits<double>::quiet_NaN()});
    }
    o.entropy.push_back(entropies(rho));
  }
  o.eff_cum = cumulative_trapezoid(o.times, o.rate);
  return o;
}

double fit_peak_frequency(const std::vector<double>& t, const std::vector<double>& y, double t_min) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (t[i] > t_min) {
      lo = std::min(lo, y[i]);
      hi = std::max(hi, y[i]);
    }
  const double floor = 0.5 * (lo + hi);
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (t[i] <= t_min || y[i] < floor) continue;
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
    const double a = y[i - 1], b = y[i], c = y[i + 1];
    const double den = a - 2.0 * b + c;
    const double h = t[i + 1] - t[i];
    const double off = den != 0.0 ? 0.5 * (a - c) / den : 0.0;
    peaks.push_back(t[i] + off * h);
  }
  if (peaks.size() < 2) return 0.0;
  const double period = (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
  return 2.0 * std::numbers::pi / period;
}

}  // namespace rydcav

#include "rydcav/propagate.hpp"

#include <algorithm>
#include <cmath>

#include "rydcav/error.hpp"
#include "rydcav/kernels.hpp"

namespace rydcav {

SparseOp to_sparse(const Eigen::MatrixXcd& m, double drop) {
  SparseOp out;
  for (int k = 0; k < m.cols(); ++k)
    for (int i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, k)) > drop) out.push_back({i, k, m(i, k)});
  return out;
}

LindbladGenerator::LindbladGenerator(int dim, Eigen::MatrixXcd h_fixed, std::vector<Eigen::MatrixXcd> h_modulated,
                                     Coefficients coefficients,
                                     std::vector<std::pair<double, Eigen::MatrixXcd>> jumps)
    : dim_(dim), h_fixed_(std::move(h_fixed)), h_mod_(std::move(h_modulated)), coef_(std::move(coefficients)) {
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(dim, dim);
  for (auto& [rate, l] : jumps) {
    if (rate == 0.0) continue;
    k += rate * (l.adjoint() * l);
    rates_.push_back(rate);
    jumps_.push_back(to_sparse(l));
  }
  eff_fixed_ = to_sparse(h_fixed_ - cplx(0.0, 1.0) * k);
  for (const auto& m : h_mod_) mod_.push_back(to_sparse(m));
  c_.assign(h_mod_.size(), 0.0);
  y_.resize(dim, dim);
  z_.resize(dim, dim);
}

Eigen::MatrixXcd LindbladGenerator::hamiltonian(double t) const {
  coef_(t, c_.data());
  Eigen::MatrixXcd h = h_fixed_;
  for (std::size_t m = 0; m < h_mod_.size(); ++m)
    if (c_[m] != 0.0) h += c_[m] * h_mod_[m];
  return h;
}

void LindbladGenerator::rhs(double t, const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const {
  const auto& kt = kernels::active();
  const std::size_t n = static_cast<std::size_t>(dim_);
  coef_(t, c_.data());

  // Y = rho H_eff^+, one column axpy per nonzero of H_eff.
  y_.setZero();
  const cplx* r = rho.data();
  cplx* y = y_.data();
  for (const auto& e : eff_fixed_) kt.axpy(n, std::conj(e.value), r + e.col * n, y + e.row * n);
  for (std::size_t m = 0; m < mod_.size(); ++m) {
    const double c = c_[m];
    if (c == 0.0) continue;
    for (const auto& e : mod_[m]) kt.axpy(n, c * std::conj(e.value), r + e.col * n, y + e.row * n);
  }

  // A = i Y + sum gamma L rho L^+, accumulated in out.
  out.noalias() = cplx(0.0, 1.0) * y_;
  for (std::size_t j = 0; j < jumps_.size(); ++j) {
    z_.setZero();
    cplx* z = z_.data();
    for (const auto& e : jumps_[j]) kt.axpy(n, std::conj(e.value), r + e.col * n, z + e.row * n);
    const double g = rates_[j];
    for (int col = 0; col < dim_; ++col) {
      const cplx* zc = z + col * n;
      cplx* oc = out.data() + col * n;
      for (const auto& e : jumps_[j]) oc[e.row] += g * e.value * zc[e.col];
    }
  }

  // out = A + A^+
  for (int j = 0; j < dim_; ++j) {
    out(j, j) = 2.0 * out(j, j).real();
    for (int i = j + 1; i < dim_; ++i) {
      const cplx s = out(i, j) + std::conj(out(j, i));
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
  }
}

LindbladGenerator collective_generator(const SystemParams& p, const PulseSchedule& s) {
  p.validate();
  s.validate();
  const HamiltonianParts parts = hamiltonian_parts(p);
  std::vector<Eigen::MatrixXcd> mod{parts.detuning, parts.s1_unit, parts.s2_unit, parts.omega_unit};
  const int n = p.n_atoms;
  auto coef = [s, n](double t, double* c) {
    const double delta = s.Delta(t);
    const EffectiveRabi r = effective_from_s(s.S(t), s.delta_s, delta, n);
    c[0] = delta + s.delta_s;
    c[1] = r.s1;
    c[2] = r.s2;
    c[3] = s.Omega(t);
  };
  std::vector<std::pair<double, Eigen::MatrixXcd>> jumps;
  for (const auto& ch : make_channels(p)) jumps.emplace_back(ch.rate, ch.op);
  return LindbladGenerator(kDim, parts.fixed, std::move(mod), std::move(coef), std::move(jumps));
}

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("step must be positive", "integrator.dt_us");
  if (stride < 1) throw ConfigError("stride must be at least 1", "integrator.stride");
  if (!(t_end > t_start) || !std::isfinite(t_end)) throw ConfigError("end time must follow start", "integrator.t_end_us");
}

double max_hamiltonian_norm(const LindbladGenerator& gen, double t0, double t1,
                            const std::vector<double>& extra_times, int samples) {
  std::vector<double> ts;
  for (int k = 0; k < samples; ++k) ts.push_back(t0 + (t1 - t0) * k / std::max(samples - 1, 1));
  for (double t : extra_times)
    if (t >= t0 && t <= t1) ts.push_back(t);
  double worst = 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es;
  for (double t : ts) {
    es.compute(gen.hamiltonian(t), Eigen::EigenvaluesOnly);
    worst = std::max(worst, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return worst;
}

void check_step(const LindbladGenerator& gen, const IntegratorConfig& cfg, const std::vector<double>& extra_times) {
  const double norm = max_hamiltonian_norm(gen, cfg.t_start, cfg.t_end, extra_times);
  if (cfg.dt * norm > 0.1)
    throw ConfigError("dt * max ||H|| = " + std::to_string(cfg.dt * norm) + " exceeds 0.1", "integrator.dt_us");
}

void integrate(const LindbladGenerator& gen, Eigen::MatrixXcd rho, const IntegratorConfig& cfg,
               const Observer& observe) {
  cfg.validate();
  const int n = gen.dim();
  const long steps = static_cast<long>(std::ceil((cfg.t_end - cfg.t_start) / cfg.dt - 1e-9));
  const double h = (cfg.t_end - cfg.t_start) / static_cast<double>(steps);
  Eigen::MatrixXcd k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n);

  if (observe) observe(cfg.t_start, rho);
  for (long k = 0; k < steps; ++k) {
    const double t = cfg.t_start + static_cast<double>(k) * h;
    gen.rhs(t, rho, k1);
    tmp = rho + (0.5 * h) * k1;
    gen.rhs(t + 0.5 * h, tmp, k2);
    tmp = rho + (0.5 * h) * k2;
    gen.rhs(t + 0.5 * h, tmp, k3);
    tmp = rho + h * k3;
    gen.rhs(t + h, tmp, k4);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double tn = cfg.t_start + static_cast<double>(k + 1) * h;
    if (!rho.allFinite()) throw DivergenceError("non-finite density matrix", tn);
    if (observe && ((k + 1) % cfg.stride == 0 || k + 1 == steps)) observe(tn, rho);
  }
}

HealthSample health_of(const Eigen::MatrixXcd& rho) {
  HealthSample h{};
  h.trace_error = std::abs(rho.trace() - 1.0);
  h.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  h.min_eigenvalue = es.eigenvalues().minCoeff();
  return h;
}

HealthReport checkpoint_health(const Trajectory& traj) {
  HealthReport r;
  for (const auto& s : traj.health) {
    r.max_trace_error = std::max(r.max_trace_error, s.trace_error);
    r.max_hermiticity_error = std::max(r.max_hermiticity_error, s.hermiticity_error);
    r.min_eigenvalue = std::min(r.min_eigenvalue, s.min_eigenvalue);
  }
  r.trace_ok = r.max_trace_error <= 1e-9;
  r.hermiticity_ok = r.max_hermiticity_error <= 1e-10;
  r.positivity_ok = r.min_eigenvalue >= -1e-8;
  return r;
}

std::vector<double> critical_times(const PulseSchedule& s) {
  std::vector<double> ts;
  for (const auto* train : {&s.p1, &s.p2, &s.s, &s.omega})
    for (const auto& p : train->pulses) ts.push_back(p.t0);
  if (s.chirp.shape != ChirpShape::Constant) {
    ts.push_back(s.chirp.t_c);
    if (s.chirp.shape == ChirpShape::TanhWindow) ts.push_back(s.chirp.t_off);
  }
  return ts;
}

Trajectory run(const SystemParams& p, const PulseSchedule& s, const IntegratorConfig& cfg, const Mat& rho0) {
  cfg.validate();
  const LindbladGenerator gen = collective_generator(p, s);
  check_step(gen, cfg, critical_times(s));
  Trajectory traj;
  integrate(gen, Eigen::MatrixXcd(rho0), cfg, [&](double t, const Eigen::MatrixXcd& rho) {
    traj.times.push_back(t);
    traj.states.emplace_back(rho);
    traj.health.push_back(health_of(rho));
  });
  return traj;
}

Mat pure_state(int index) {
  Mat r = Mat::Zero();
  r(index, index) = 1.0;
  return r;
}

}  // namespace rydcav

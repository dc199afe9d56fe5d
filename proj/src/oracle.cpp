#include "rydcav/oracle.hpp"

#include <cmath>
#include <numbers>

#include "rydcav/error.hpp"

namespace rydcav {
namespace {

struct Parts {
  Eigen::MatrixXcd fixed, detuning, drive, omega;
  std::vector<std::pair<double, Eigen::MatrixXcd>> jumps;
};

// <n-1| a |n>
double lower(int n, Ladder ladder) {
  if (n <= 0) return 0.0;
  return ladder == Ladder::Bosonic ? std::sqrt(static_cast<double>(n)) : 1.0;
}

std::vector<int> levels_of(const ProductSpace& ps, int idx) {
  std::vector<int> lv(ps.n_atoms);
  for (int a = 0; a < ps.n_atoms; ++a) lv[a] = ps.level(idx, a);
  return lv;
}

Parts build_parts(const SystemParams& p) {
  p.validate();
  if (p.n_atoms > 3) throw UnsupportedError("the product-space oracle supports at most 3 atoms");
  if (p.coupling != CouplingMode::Coherent) throw UnsupportedError("the oracle models the coherent cavity only");
  const ProductSpace ps(p.n_atoms);
  const int d = ps.dim;
  Parts out;
  out.fixed = Eigen::MatrixXcd::Zero(d, d);
  out.detuning = Eigen::MatrixXcd::Zero(d, d);
  out.drive = Eigen::MatrixXcd::Zero(d, d);
  out.omega = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd a_op = Eigen::MatrixXcd::Zero(d, d);
  std::vector<Eigen::MatrixXcd> atom_r(p.n_atoms, Eigen::MatrixXcd::Zero(d, d));
  std::vector<Eigen::MatrixXcd> atom_e(p.n_atoms, Eigen::MatrixXcd::Zero(d, d));

  for (int b = 0; b < d; ++b) {
    const auto lv = levels_of(ps, b);
    const int n = ps.photons(b);
    int nr = 0, ne = 0;
    for (int l : lv) {
      nr += (l == kR);
      ne += (l == kE);
    }
    const bool excitation_side = n == 0 && ne == 0;
    if (excitation_side) out.detuning(b, b) = -static_cast<double>(nr);
    out.fixed(b, b) = -p.delta_c * ne + p.delta_r / 2.0 * (nr * (nr - 1) / 2);
    if (n > 0) a_op(b - 1, b) = lower(n, p.ladder);

    for (int i = 0; i < p.n_atoms; ++i) {
      auto to = lv;
      if (lv[i] == kG) {
        to[i] = kR;
        if (excitation_side) {
          const int c = ps.index(to, n);
          out.drive(c, b) += 0.25;
          out.drive(b, c) += 0.25;
        }
        // e_i <- g_i with a photon absorbed: sigma+_i a
        if (n > 0) {
          to[i] = kE;
          const int c2 = ps.index(to, n - 1);
          const double v = p.g / 2.0 * lower(n, p.ladder);
          out.fixed(c2, b) += v;
          out.fixed(b, c2) += v;
        }
      } else if (lv[i] == kR) {
        to[i] = kE;
        const int c = ps.index(to, n);
        out.omega(c, b) += 0.5;
        out.omega(b, c) += 0.5;
        atom_r[i](c, b) = 1.0;  // r -> e
      } else {
        to[i] = kG;
        atom_e[i](ps.index(to, n), b) = 1.0;  // e -> g
      }
    }
  }
  out.jumps.emplace_back(p.kappa, a_op);
  for (int i = 0; i < p.n_atoms; ++i) {
    out.jumps.emplace_back(p.gamma_r, atom_r[i]);
    out.jumps.emplace_back(p.gamma_perp, atom_e[i]);
  }
  return out;
}

}  // namespace

LindbladGenerator oracle_generator(const SystemParams& p, const PulseSchedule& s) {
  s.validate();
  Parts parts = build_parts(p);
  const int d = static_cast<int>(parts.fixed.rows());
  auto coef = [s](double t, double* c) {
    c[0] = s.Delta(t) + s.delta_s;
    c[1] = s.S(t);
    c[2] = s.Omega(t);
  };
  std::vector<Eigen::MatrixXcd> mod{parts.detuning, parts.drive, parts.omega};
  return LindbladGenerator(d, parts.fixed, std::move(mod), std::move(coef), std::move(parts.jumps));
}

Eigen::MatrixXcd oracle_hamiltonian(const SystemParams& p, const PulseSchedule& s, double t) {
  const Parts parts = build_parts(p);
  return parts.fixed + (s.Delta(t) + s.delta_s) * parts.detuning + s.S(t) * parts.drive + s.Omega(t) * parts.omega;
}

Projection project_to_collective(const Eigen::MatrixXcd& product_rho, int n_atoms) {
  const Eigen::MatrixXcd u = collective_isometry(n_atoms);
  Projection pr;
  pr.rho = u.adjoint() * product_rho * u;
  pr.leakage = 1.0 - pr.rho.trace().real();
  return pr;
}

Eigen::MatrixXcd lift_to_product(const Mat& rho, int n_atoms) {
  const Eigen::MatrixXcd u = collective_isometry(n_atoms);
  return u * rho * u.adjoint();
}

OracleTrajectory oracle_run(const SystemParams& p, const PulseSchedule& s, const IntegratorConfig& cfg,
                            const Mat& rho0) {
  cfg.validate();
  if (std::abs(rho0(L0, L0)) > 0.0) throw UnsupportedError("the dummy state has no product-space image");
  const LindbladGenerator gen = oracle_generator(p, s);
  check_step(gen, cfg, critical_times(s));
  const ProductSpace ps(p.n_atoms);
  std::vector<int> multi;
  for (int b = 0; b < ps.dim; ++b) {
    int excited = 0;
    for (int a = 0; a < ps.n_atoms; ++a) excited += ps.level(b, a) != kG;
    if (excited >= 2) multi.push_back(b);
  }
  OracleTrajectory out;
  integrate(gen, lift_to_product(rho0, p.n_atoms), cfg, [&](double t, const Eigen::MatrixXcd& rho) {
    const Projection pr = project_to_collective(rho, p.n_atoms);
    out.times.push_back(t);
    out.projected.push_back(pr.rho);
    out.leakage.push_back(pr.leakage);
    double m = 0.0;
    for (int b : multi) m += rho(b, b).real();
    out.multi_excitation.push_back(m);
    out.health.push_back(health_of(rho));
  });
  return out;
}

}  // namespace rydcav

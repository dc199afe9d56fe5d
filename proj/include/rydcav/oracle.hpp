#pragma once

#include <vector>

#include "rydcav/model.hpp"
#include "rydcav/propagate.hpp"

namespace rydcav {

// Per-atom {g, e, r} x photons {0, 1, 2}, N <= 3. Per-atom couplings:
//   S(t)/4 on g<->r, Omega(t)/2 on r<->e, -(Delta + Delta_s) per r,
//   -Delta_c per e, g/2 (sigma+ a + h.c.), Delta_R/2 per r pair.
// The S drive and the Delta detuning act only on configurations with no
// photon and no atom in e, as in the excitation-side Hamiltonian.
// On the symmetric subspace these reproduce the collective S1 exactly and
// S2 whenever Delta = -Delta_s. Loss: kappa on a, Gamma_r per atom r->e,
// Gamma_perp per atom e->g.
LindbladGenerator oracle_generator(const SystemParams& p, const PulseSchedule& s);

// Dense product-space Hamiltonian at time t.
Eigen::MatrixXcd oracle_hamiltonian(const SystemParams& p, const PulseSchedule& s, double t);

struct Projection {
  Mat rho;         // U^+ rho U over the ten non-dummy collective states
  double leakage;  // 1 - tr(projected)
};

Projection project_to_collective(const Eigen::MatrixXcd& product_rho, int n_atoms);
Eigen::MatrixXcd lift_to_product(const Mat& rho, int n_atoms);

struct OracleTrajectory {
  std::vector<double> times;
  std::vector<Mat> projected;
  std::vector<double> leakage;
  std::vector<double> multi_excitation;  // product-space population with >= 2 atoms out of g
  std::vector<HealthSample> health;
};

OracleTrajectory oracle_run(const SystemParams& p, const PulseSchedule& s, const IntegratorConfig& cfg,
                            const Mat& rho0);

}  // namespace rydcav

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rydcav/dissipation.hpp"
#include "rydcav/model.hpp"

namespace rydcav {

struct SparseEntry {
  int row, col;
  cplx value;
};
using SparseOp = std::vector<SparseEntry>;

SparseOp to_sparse(const Eigen::MatrixXcd& m, double drop = 0.0);

// Lindblad generator of the form
//   H(t) = H_fixed + sum_m c_m(t) H_m,   jumps (gamma_k, L_k),
// evaluated as drho = A + A^+ with A = i rho H_eff^+ + sum_k gamma_k L_k rho L_k^+,
// H_eff = H - i sum_k gamma_k L_k^+ L_k. Valid for Hermitian rho.
class LindbladGenerator {
 public:
  using Coefficients = std::function<void(double t, double* c)>;

  LindbladGenerator(int dim, Eigen::MatrixXcd h_fixed, std::vector<Eigen::MatrixXcd> h_modulated,
                    Coefficients coefficients, std::vector<std::pair<double, Eigen::MatrixXcd>> jumps);

  int dim() const { return dim_; }
  void rhs(double t, const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const;
  Eigen::MatrixXcd hamiltonian(double t) const;

 private:
  int dim_;
  Eigen::MatrixXcd h_fixed_;
  std::vector<Eigen::MatrixXcd> h_mod_;
  SparseOp eff_fixed_;  // H_fixed - i K
  std::vector<SparseOp> mod_;
  Coefficients coef_;
  std::vector<double> rates_;
  std::vector<SparseOp> jumps_;
  mutable std::vector<double> c_;
  mutable Eigen::MatrixXcd y_, z_;
};

LindbladGenerator collective_generator(const SystemParams& p, const PulseSchedule& s);

struct IntegratorConfig {
  double dt = 1e-4;  // us
  int stride = 10;
  double t_start = 0.0;
  double t_end = 1.0;

  void validate() const;
};

// Largest spectral norm of H(t) over a grid plus the given extra times.
double max_hamiltonian_norm(const LindbladGenerator& gen, double t0, double t1,
                            const std::vector<double>& extra_times = {}, int samples = 1000);

// Throws ConfigError when dt * max ||H|| > 0.1.
void check_step(const LindbladGenerator& gen, const IntegratorConfig& cfg,
                const std::vector<double>& extra_times = {});

using Observer = std::function<void(double t, const Eigen::MatrixXcd& rho)>;

// Classical RK4 with fixed step; the observer sees the initial state and
// every stride-th step, and always the final state. No renormalization.
// Throws DivergenceError on non-finite entries.
void integrate(const LindbladGenerator& gen, Eigen::MatrixXcd rho, const IntegratorConfig& cfg,
               const Observer& observe);

struct HealthSample {
  double trace_error;
  double hermiticity_error;
  double min_eigenvalue;
};

HealthSample health_of(const Eigen::MatrixXcd& rho);

struct HealthReport {
  double max_trace_error = 0.0;
  double max_hermiticity_error = 0.0;
  double min_eigenvalue = 1.0;
  bool trace_ok = true;
  bool hermiticity_ok = true;
  bool positivity_ok = true;
  bool ok() const { return trace_ok && hermiticity_ok && positivity_ok; }
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Mat> states;
  std::vector<HealthSample> health;
};

HealthReport checkpoint_health(const Trajectory& traj);

// Times worth probing for the step check: every pulse center.
std::vector<double> critical_times(const PulseSchedule& s);

Trajectory run(const SystemParams& p, const PulseSchedule& s, const IntegratorConfig& cfg, const Mat& rho0);

Mat pure_state(int index);

}  // namespace rydcav

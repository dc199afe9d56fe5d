#pragma once

#include <vector>

#include "rydcav/dissipation.hpp"
#include "rydcav/propagate.hpp"

namespace rydcav {

RealVec populations(const Mat& rho);

// 2 kappa tr(P rho) with P = L_kappa^+ L_kappa.
double photon_rate(const Mat& rho, const Mat& projector, double kappa);

// Running trapezoid integral; same length as the inputs, starts at 0.
std::vector<double> cumulative_trapezoid(const std::vector<double>& t, const std::vector<double>& y);

double emission_efficiency(const Trajectory& traj, const std::vector<CollapseChannel>& channels);

struct DipoleCorrelation {
  cplx raw;         // mean over ordered pairs i != j of <D+_i D-_j>
  cplx normalized;  // raw / sqrt(<D+_i D-_i><D+_j D-_j>), 0 when undefined
};

// N in {2, 3}; the dummy state carries no atomic coherence and is dropped.
DipoleCorrelation dipole_correlation(const Mat& rho, int n_atoms);

enum class G2Status { Defined, NegInfinity, Undefined };

struct LogG2 {
  G2Status status;
  double value;  // natural log when Defined
};

LogG2 log_g2(const Mat& rho, int n_atoms);

struct Entropies {
  double total, atoms, photons;
  bool araki_lieb_ok;
};

double von_neumann(const Eigen::MatrixXcd& rho);
Eigen::MatrixXcd reduced_atoms(const Mat& rho);    // 7 x 7 over G, R, RR, E, EE, ER, L
Eigen::MatrixXcd reduced_photons(const Mat& rho);  // 3 x 3 over 0, 1, 2
Entropies entropies(const Mat& rho);

struct ObservableSeries {
  std::vector<double> times;
  std::vector<RealVec> populations;
  std::vector<double> rate;
  std::vector<double> eff_cum;
  std::vector<DipoleCorrelation> mu12;
  std::vector<LogG2> ln_g2;
  std::vector<Entropies> entropy;
};

ObservableSeries observe(const Trajectory& traj, const SystemParams& p);

// Angular frequency from the mean spacing of local maxima of y (t > t_min),
// each refined by a parabola through its neighbours. Returns 0 with fewer
// than two peaks.
double fit_peak_frequency(const std::vector<double>& t, const std::vector<double>& y, double t_min = 0.0);

}  // namespace rydcav

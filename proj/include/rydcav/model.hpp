#pragma once

#include "rydcav/basis.hpp"
#include "rydcav/drive.hpp"

namespace rydcav {

enum class CouplingMode { Coherent, Purcell };
enum class LindbladForm { Sum, Split };
enum class Ladder { Literal, Bosonic };

// All frequencies are angular, rad/us.
struct SystemParams {
  int n_atoms = 1;
  double g = 0.0;
  double kappa = 0.0;
  double gamma_r = 0.0;
  double gamma_perp = 0.0;
  double gamma_0 = 0.0;
  double delta_c = 0.0;
  double delta_r = 0.0;
  double gamma_s = 0.0;  // blockade diagnostic only
  double gamma_p = 0.0;  // purcell mode
  double deph_r = 0.0;
  double deph_rr = 0.0;
  CouplingMode coupling = CouplingMode::Coherent;
  LindbladForm form = LindbladForm::Sum;
  Ladder ladder = Ladder::Literal;

  void validate() const;
};

Mat build_h1(const SystemParams& p, const PulseSchedule& s, double t);
Mat build_h2(const SystemParams& p, const PulseSchedule& s, double t);
Mat build_haa(const SystemParams& p);
Mat build_total(const SystemParams& p, const PulseSchedule& s, double t);

// Time-independent part of the total Hamiltonian and the unit-amplitude
// matrices multiplying each time-dependent envelope, so the solver can
// assemble H(t) with a handful of scalar multiplies.
struct HamiltonianParts {
  Mat fixed;       // Delta_c, g and H_aa terms
  Mat detuning;    // multiplies (Delta + Delta_s)
  Mat s1_unit;     // multiplies S1 / 2
  Mat s2_unit;     // multiplies S2 / 2
  Mat omega_unit;  // multiplies Omega / 2
};

HamiltonianParts hamiltonian_parts(const SystemParams& p);
Mat assemble(const HamiltonianParts& parts, const SystemParams& p, const PulseSchedule& s, double t);

}  // namespace rydcav

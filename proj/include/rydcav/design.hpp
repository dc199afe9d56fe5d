#pragma once

namespace rydcav::design {

inline constexpr double kSpeedOfLight = 299792458.0;        // m/s
inline constexpr double kEpsilon0 = 8.8541878128e-12;       // F/m
inline constexpr double kHbar = 1.054571817e-34;            // J s
// Rb 87 D2 cycling transition |F=2,mF=2> -> |F'=3,mF'=3> (Steck, Rubidium 87 D Line Data).
inline constexpr double kRbD2CyclingDipole = 2.53438e-29;  // C m

// SI units throughout; rates are angular (rad/s).
struct CavityGeometry {
  double length = 50e-6;
  double mirror_radius = 25e-3;
  double wavelength = 780e-9;
  double r1 = 0.999985;
  double r2 = 0.99985;
  double dipole = kRbD2CyclingDipole;
  double gamma_0 = 2.0 * 3.14159265358979323846 * 6e6;

  void validate() const;
};

struct CavityDerived {
  double waist;          // w0, m
  double mode_volume;    // V, m^3
  double g;              // rad/s
  double finesse;
  double purcell;        // F_p
  double gamma_p;        // F_p * Gamma_0, rad/s
  double cooperativity;  // F_p / 2
  double kappa;          // rad/s
};

double finesse(double r1, double r2);
double beam_waist(const CavityGeometry& g);
double mode_volume(const CavityGeometry& g);
double coupling_g(const CavityGeometry& g);
double purcell_factor(const CavityGeometry& g);
// Field decay rate pi c / (F L_c).
double kappa_from_finesse(const CavityGeometry& g);
CavityDerived cavity_derived(const CavityGeometry& g);

struct InteractionSpec {
  double c_p;  // rad/s * m^p
  int p;       // 3 or 6
  double distance;
};

double blockade_shift(const InteractionSpec& s);
// C_p giving `shift` at `distance`.
double calibrate_cp(double shift, double distance, int p);

}  // namespace rydcav::design

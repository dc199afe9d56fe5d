#include "rydcav/design.hpp"

#include <cmath>
#include <numbers>

#include "rydcav/error.hpp"

namespace rydcav::design {

using std::numbers::pi;

void CavityGeometry::validate() const {
  if (!(length > 0.0)) throw ConfigError("must be positive", "geometry.length_m");
  if (!(mirror_radius > 0.0) || length >= 2.0 * mirror_radius)
    throw DomainError("unstable cavity: need 0 < L_c < 2 R_c");
  if (!(r1 > 0.0 && r1 < 1.0 && r2 > 0.0 && r2 < 1.0))
    throw DomainError("mirror reflectivities must lie in (0, 1)");
  if (!(wavelength > 0.0)) throw ConfigError("must be positive", "geometry.wavelength_m");
  if (!(dipole > 0.0)) throw ConfigError("must be positive", "geometry.dipole_cm");
  if (!(gamma_0 >= 0.0)) throw ConfigError("must be non-negative", "geometry.gamma_0_2pi_mhz");
}

double finesse(double r1, double r2) {
  const double loss = (1.0 - r1) + (1.0 - r2);
  if (!(loss > 0.0)) throw SingularError("finesse diverges for lossless mirrors");
  return 2.0 * pi / loss;
}

double beam_waist(const CavityGeometry& g) {
  g.validate();
  const double half = g.length / 2.0;
  return std::sqrt(g.wavelength / pi * std::sqrt(half * (g.mirror_radius - half)));
}

double mode_volume(const CavityGeometry& g) {
  const double w0 = beam_waist(g);
  return pi / 4.0 * w0 * w0 * g.length;
}

double coupling_g(const CavityGeometry& g) {
  const double omega_c = 2.0 * pi * kSpeedOfLight / g.wavelength;
  return g.dipole * std::sqrt(omega_c / (2.0 * kHbar * kEpsilon0 * mode_volume(g)));
}

double purcell_factor(const CavityGeometry& g) {
  const double l2 = g.wavelength * g.wavelength;
  return 3.0 * l2 * g.length * finesse(g.r1, g.r2) / (2.0 * pi * pi * mode_volume(g));
}

double kappa_from_finesse(const CavityGeometry& g) {
  g.validate();
  return pi * kSpeedOfLight / (finesse(g.r1, g.r2) * g.length);
}

CavityDerived cavity_derived(const CavityGeometry& g) {
  CavityDerived d{};
  d.waist = beam_waist(g);
  d.mode_volume = mode_volume(g);
  d.g = coupling_g(g);
  d.finesse = finesse(g.r1, g.r2);
  d.purcell = purcell_factor(g);
  d.gamma_p = d.purcell * g.gamma_0;
  d.cooperativity = d.purcell / 2.0;
  d.kappa = kappa_from_finesse(g);
  return d;
}

double blockade_shift(const InteractionSpec& s) {
  if (s.p != 3 && s.p != 6) throw DomainError("interaction exponent must be 3 or 6");
  if (s.distance == 0.0) throw SingularError("zero interatomic distance");
  if (!(s.distance > 0.0)) throw DomainError("distance must be positive");
  return s.c_p / std::pow(s.distance, s.p);
}

double calibrate_cp(double shift, double distance, int p) {
  if (!(distance > 0.0)) throw DomainError("distance must be positive");
  return shift * std::pow(distance, p);
}

}  // namespace rydcav::design

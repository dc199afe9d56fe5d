#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace rydcav {

using cplx = std::complex<double>;

inline constexpr int kDim = 11;
using Mat = Eigen::Matrix<cplx, kDim, kDim>;
using RealVec = Eigen::Matrix<double, kDim, 1>;

enum class Atomic { G, R, RR, E, EE, ER, L };

int rydberg_count(Atomic a);
int e_count(Atomic a);
std::string_view atomic_name(Atomic a);

struct BasisState {
  Atomic atomic;
  int photons;
  bool operator==(const BasisState&) const = default;
};

// Canonical indices into every 11x11 matrix and CSV column list.
enum Index : int { G0 = 0, G1, G2, R0, R1, RR0, E0, E1, EE0, ER0, L0 };

const std::array<BasisState, kDim>& enumerate_basis();
int index_of(const BasisState& s);
BasisState state_of(int index);
std::string label(int index);  // "G0", "ER0", ...

// rydberg + e + photon count; the dummy state reports 0.
int excitation(int index);

// Product space {g, e, r}^N x photons {0, 1, 2}. Atom 0 is the most
// significant base-3 digit; the photon number is the fastest index.
enum Level : int { kG = 0, kE = 1, kR = 2 };

struct ProductSpace {
  int n_atoms;
  int dim;

  explicit ProductSpace(int n);
  int index(const std::vector<int>& levels, int photons) const;
  int level(int index, int atom) const;
  int photons(int index) const { return index % 3; }
};

// Symmetric superposition over all atom configurations carrying the
// state's (e, r) counts, tensored with its photon number.
Eigen::VectorXcd expand_to_product(const BasisState& s, int n_atoms);

// Columns are expand_to_product of the ten non-dummy states; the L0
// column is left zero.
Eigen::MatrixXcd collective_isometry(int n_atoms);

}  // namespace rydcav

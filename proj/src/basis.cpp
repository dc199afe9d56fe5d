#include "rydcav/basis.hpp"

#include <cmath>

#include "rydcav/error.hpp"

namespace rydcav {

int rydberg_count(Atomic a) {
  switch (a) {
    case Atomic::R: return 1;
    case Atomic::RR: return 2;
    case Atomic::ER: return 1;
    default: return 0;
  }
}

int e_count(Atomic a) {
  switch (a) {
    case Atomic::E: return 1;
    case Atomic::EE: return 2;
    case Atomic::ER: return 1;
    default: return 0;
  }
}

std::string_view atomic_name(Atomic a) {
  switch (a) {
    case Atomic::G: return "G";
    case Atomic::R: return "R";
    case Atomic::RR: return "RR";
    case Atomic::E: return "E";
    case Atomic::EE: return "EE";
    case Atomic::ER: return "ER";
    case Atomic::L: return "L";
  }
  return "?";
}

const std::array<BasisState, kDim>& enumerate_basis() {
  static const std::array<BasisState, kDim> states{{
      {Atomic::G, 0}, {Atomic::G, 1}, {Atomic::G, 2}, {Atomic::R, 0},
      {Atomic::R, 1}, {Atomic::RR, 0}, {Atomic::E, 0}, {Atomic::E, 1},
      {Atomic::EE, 0}, {Atomic::ER, 0}, {Atomic::L, 0},
  }};
  return states;
}

int index_of(const BasisState& s) {
  const auto& all = enumerate_basis();
  for (int i = 0; i < kDim; ++i)
    if (all[i] == s) return i;
  throw DomainError(std::string("state outside the truncated basis: ") +
                    std::string(atomic_name(s.atomic)) + std::to_string(s.photons));
}

BasisState state_of(int index) {
  if (index < 0 || index >= kDim) throw DomainError("basis index out of range");
  return enumerate_basis()[index];
}

std::string label(int index) {
  const BasisState s = state_of(index);
  return std::string(atomic_name(s.atomic)) + std::to_string(s.photons);
}

int excitation(int index) {
  const BasisState s = state_of(index);
  if (s.atomic == Atomic::L) return 0;
  return rydberg_count(s.atomic) + e_count(s.atomic) + s.photons;
}

ProductSpace::ProductSpace(int n) : n_atoms(n), dim(0) {
  if (n < 1 || n > 3) throw UnsupportedError("product space supports 1 to 3 atoms");
  int d = 1;
  for (int i = 0; i < n; ++i) d *= 3;
  dim = d * 3;
}

int ProductSpace::index(const std::vector<int>& levels, int photons) const {
  int code = 0;
  for (int a = 0; a < n_atoms; ++a) code = code * 3 + levels[a];
  return code * 3 + photons;
}

int ProductSpace::level(int index, int atom) const {
  int code = index / 3;
  for (int a = n_atoms - 1; a > atom; --a) code /= 3;
  return code % 3;
}

Eigen::VectorXcd expand_to_product(const BasisState& s, int n_atoms) {
  if (s.atomic == Atomic::L) throw UnsupportedError("the dummy state has no product-space image");
  const int ne = e_count(s.atomic);
  const int nr = rydberg_count(s.atomic);
  if (n_atoms < 1 || n_atoms > 3) throw UnsupportedError("product space supports 1 to 3 atoms");
  if (n_atoms < ne + nr) throw DomainError("too few atoms for the excitation count");

  const ProductSpace ps(n_atoms);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(ps.dim);
  int count = 0;
  for (int i = s.photons; i < ps.dim; i += 3) {
    int ce = 0, cr = 0;
    for (int a = 0; a < n_atoms; ++a) {
      const int l = ps.level(i, a);
      ce += (l == kE);
      cr += (l == kR);
    }
    if (ce == ne && cr == nr) {
      v[i] = 1.0;
      ++count;
    }
  }
  v /= std::sqrt(static_cast<double>(count));
  return v;
}

Eigen::MatrixXcd collective_isometry(int n_atoms) {
  const ProductSpace ps(n_atoms);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(ps.dim, kDim);
  for (int k = 0; k < kDim; ++k) {
    const BasisState s = state_of(k);
    if (s.atomic == Atomic::L) continue;
    if (rydberg_count(s.atomic) + e_count(s.atomic) > n_atoms) continue;
    u.col(k) = expand_to_product(s, n_atoms);
  }
  return u;
}

}  // namespace rydcav

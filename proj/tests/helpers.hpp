#pragma once

#include <random>

#include "rydcav/basis.hpp"

namespace testing {

inline rydcav::Mat random_density(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  rydcav::Mat a;
  for (int i = 0; i < rydcav::kDim; ++i)
    for (int j = 0; j < rydcav::kDim; ++j) a(i, j) = {n(rng), n(rng)};
  rydcav::Mat rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline rydcav::Mat random_hermitian(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  rydcav::Mat a;
  for (int i = 0; i < rydcav::kDim; ++i)
    for (int j = 0; j < rydcav::kDim; ++j) a(i, j) = {n(rng), n(rng)};
  return (a + a.adjoint()) / 2.0;
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testing

#pragma once

#include <string>
#include <vector>

#include "rydcav/model.hpp"

namespace rydcav {

// Contributes rate * (2 L rho L^+ - L^+L rho - rho L^+L).
struct CollapseChannel {
  double rate = 0.0;
  Mat op;  // lowering form
  std::string name;
};

std::vector<CollapseChannel> make_channels(const SystemParams& p);

Mat apply_dissipator(const std::vector<CollapseChannel>& channels, const Mat& rho);

// Sum of L^+L over the kappa channel(s).
Mat emission_projector(const std::vector<CollapseChannel>& channels);

// Rate of the kappa channel, 0 when absent.
double kappa_rate(const std::vector<CollapseChannel>& channels);

}  // namespace rydcav

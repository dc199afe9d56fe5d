#include "rydcav/kernels.hpp"

namespace rydcav::kernels {
namespace {

void axpy_ref(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = cplx(y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr));
  }
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", &axpy_ref};
  return table;
}

}  // namespace rydcav::kernels

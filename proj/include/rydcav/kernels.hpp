#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Complex double-precision inner loops of the master-equation right-hand
// side. Every routine has a portable scalar reference; SIMD variants are
// selected once at runtime and must agree with the reference to rounding.
namespace rydcav::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  // y[i] += alpha * x[i], i < n
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
};

const KernelTable& scalar();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2();

// The table used by the solvers. Resolved on first call: AVX2 when
// available unless the environment variable RYDCAV_KERNELS=scalar is set.
const KernelTable& active();

}  // namespace rydcav::kernels

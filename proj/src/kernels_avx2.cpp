#include <immintrin.h>

#include "rydcav/kernels.hpp"

namespace rydcav::kernels {
namespace {

// Two complex doubles per __m256d: [re0 im0 re1 im1].
inline __m256d cmul_bcast(__m256d x, __m256d ar, __m256d ai) {
  const __m256d xs = _mm256_permute_pd(x, 0b0101);  // [im0 re0 im1 re1]
  return _mm256_fmaddsub_pd(x, ar, _mm256_mul_pd(xs, ai));
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x0 = _mm256_loadu_pd(xd + 2 * i);
    __m256d x1 = _mm256_loadu_pd(xd + 2 * i + 4);
    __m256d y0 = _mm256_loadu_pd(yd + 2 * i);
    __m256d y1 = _mm256_loadu_pd(yd + 2 * i + 4);
    y0 = _mm256_add_pd(y0, cmul_bcast(x0, ar, ai));
    y1 = _mm256_add_pd(y1, cmul_bcast(x1, ar, ai));
    _mm256_storeu_pd(yd + 2 * i, y0);
    _mm256_storeu_pd(yd + 2 * i + 4, y1);
  }
  for (; i + 2 <= n; i += 2) {
    __m256d x0 = _mm256_loadu_pd(xd + 2 * i);
    __m256d y0 = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(y0, cmul_bcast(x0, ar, ai)));
  }
  if (i < n) {
    // odd tail: one complex in the low 128 bits
    const __m128d x0 = _mm_loadu_pd(xd + 2 * i);
    const __m128d xs = _mm_permute_pd(x0, 0b01);
    const __m128d prod = _mm_fmaddsub_pd(x0, _mm256_castpd256_pd128(ar),
                                         _mm_mul_pd(xs, _mm256_castpd256_pd128(ai)));
    _mm_storeu_pd(yd + 2 * i, _mm_add_pd(_mm_loadu_pd(yd + 2 * i), prod));
  }
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2", &axpy_avx2};
  return &table;
}

}  // namespace rydcav::kernels

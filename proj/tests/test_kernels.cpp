#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "rydcav/kernels.hpp"

using namespace rydcav::kernels;

namespace {

std::vector<cplx> random_vec(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

}  // namespace

TEST_CASE("scalar axpy") {
  std::vector<cplx> x{{1, 2}, {3, -1}}, y{{0, 0}, {1, 1}};
  scalar().axpy(2, {0, 1}, x.data(), y.data());
  CHECK(y[0] == cplx(-2, 1));
  CHECK(y[1] == cplx(2, 4));
  scalar().axpy(0, {1, 0}, nullptr, nullptr);
}

TEST_CASE("simd axpy matches the scalar reference") {
  const KernelTable* simd = avx2();
  if (!simd) {
    MESSAGE("AVX2 kernels unavailable on this machine; skipping");
    return;
  }
  std::mt19937 rng(21);
  for (std::size_t n = 0; n <= 67; ++n) {
    const auto x = random_vec(rng, n);
    auto y1 = random_vec(rng, n);
    auto y2 = y1;
    const cplx a = random_vec(rng, 1)[0];
    scalar().axpy(n, a, x.data(), y1.data());
    simd->axpy(n, a, x.data(), y2.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-15 * (1.0 + std::abs(y1[i])));
  }
}

TEST_CASE("active table is one of the variants") {
  const KernelTable& k = active();
  CHECK((&k == &scalar() || &k == avx2()));
}

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "steklov/kernels.hpp"

using namespace steklov::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar and AVX2 kernels agree") {
  if (!isa_available(Isa::Avx2)) {
    MESSAGE("AVX2 unavailable on this machine; only the scalar table is exercised");
  }
  const KernelTable& ref = table(Isa::Scalar);
  const KernelTable& simd = table(Isa::Avx2);
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 101u, 257u}) {
    CAPTURE(n);
    const auto a = random_vector(rng, n);
    const auto b = random_vector(rng, n);
    double scale = 1.0;
    for (std::size_t k = 0; k < n; ++k) scale += std::abs(a[k] * b[k]);
    CHECK(std::abs(ref.dot(a.data(), b.data(), n) - simd.dot(a.data(), b.data(), n)) <= 1e-13 * scale);

    auto y1 = b, y2 = b;
    ref.axpy(0.37, a.data(), y1.data(), n);
    simd.axpy(0.37, a.data(), y2.data(), n);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(y1[k] - y2[k]) <= 1e-14 * (1 + std::abs(y1[k])));

    auto x1 = a, x2 = a, z1 = b, z2 = b;
    const double c = std::cos(0.3), s = std::sin(0.3);
    ref.rotate(x1.data(), z1.data(), n, c, s);
    simd.rotate(x2.data(), z2.data(), n, c, s);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(x1[k] - x2[k]) <= 1e-14 * (1 + std::abs(x1[k])));
      CHECK(std::abs(z1[k] - z2[k]) <= 1e-14 * (1 + std::abs(z1[k])));
    }
    CHECK(ref.max_abs(a.data(), n) == simd.max_abs(a.data(), n));
  }
}

TEST_CASE("scalar reference values") {
  const std::vector<double> a{1, 2, 3, 4, 5}, b{5, 4, 3, 2, 1};
  const KernelTable& ref = table(Isa::Scalar);
  CHECK(ref.dot(a.data(), b.data(), 5) == 35.0);
  CHECK(ref.max_abs(b.data(), 5) == 5.0);
  std::vector<double> x{1, 0}, y{0, 1};
  ref.rotate(x.data(), y.data(), 2, 0.0, 1.0);
  CHECK(x == std::vector<double>{0, -1});
  CHECK(y == std::vector<double>{1, 0});
  CHECK(isa_name(Isa::Scalar) == "scalar");
}

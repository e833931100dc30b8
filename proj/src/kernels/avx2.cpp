// Compiled with -mavx2 -mfma; only reached after a CPUID check.
#include <immintrin.h>

#include <cmath>

#include "steklov/kernels.hpp"

namespace steklov::kernels::detail {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
  }
  for (; k + 4 <= n; k += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) sum += a[k] * b[k];
  return sum;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4)
    _mm256_storeu_pd(y + k, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
  for (; k < n; ++k) y[k] += alpha * x[k];
}

void rotate_avx2(double* x, double* y, std::size_t n, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xk = _mm256_loadu_pd(x + k);
    const __m256d yk = _mm256_loadu_pd(y + k);
    _mm256_storeu_pd(x + k, _mm256_fmsub_pd(vc, xk, _mm256_mul_pd(vs, yk)));
    _mm256_storeu_pd(y + k, _mm256_fmadd_pd(vs, xk, _mm256_mul_pd(vc, yk)));
  }
  for (; k < n; ++k) {
    const double xk = x[k];
    const double yk = y[k];
    x[k] = c * xk - s * yk;
    y[k] = s * xk + c * yk;
  }
}

double max_abs_avx2(const double* x, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + k)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double out = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; k < n; ++k) out = std::fmax(out, std::fabs(x[k]));
  return out;
}

}  // namespace

const KernelTable avx2_table{dot_avx2, axpy_avx2, rotate_avx2, max_abs_avx2};

}  // namespace steklov::kernels::detail

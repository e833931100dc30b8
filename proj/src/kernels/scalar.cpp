#include <cmath>

#include "steklov/kernels.hpp"

namespace steklov::kernels::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += a[k] * b[k];
  return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

void rotate_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t k = 0; k < n; ++k) {
    const double xk = x[k];
    const double yk = y[k];
    x[k] = c * xk - s * yk;
    y[k] = s * xk + c * yk;
  }
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) m = std::fmax(m, std::fabs(x[k]));
  return m;
}

}  // namespace

const KernelTable scalar_table{dot_scalar, axpy_scalar, rotate_scalar, max_abs_scalar};

}  // namespace steklov::kernels::detail

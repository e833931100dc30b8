#include "steklov/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "steklov/kernels.hpp"

namespace steklov {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<double> Matrix::multiply(std::span<const double> x) const {
  std::vector<double> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = kernels::dot(row(r), x);
  return y;
}

Matrix Matrix::multiply(const Matrix& other) const {
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (const double a = (*this)(r, k); a != 0.0) kernels::axpy(a, other.row(k), out.row(r));
  return out;
}

double Matrix::frobenius_norm() const {
  return std::sqrt(kernels::dot(data_, data_));
}

double Matrix::max_abs() const {
  return kernels::max_abs(data_);
}

double Matrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c) worst = std::max(worst, std::fabs((*this)(r, c) - (*this)(c, r)));
  return worst;
}

SymmetricEigen symmetric_eigen(const Matrix& input) {
  const std::size_t n = input.rows();
  Matrix a = input;
  // Symmetrise so round-off in the caller cannot bias the rotations.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) a(r, c) = a(c, r) = 0.5 * (a(r, c) + a(c, r));
  Matrix basis = Matrix::identity(n);  // row k is the k-th eigenvector when done

  SymmetricEigen out;
  const double scale = a.frobenius_norm();
  constexpr std::size_t max_sweeps = 100;
  for (; out.sweeps < max_sweeps && scale > 0.0; ++out.sweeps) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-16 * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Entries this small no longer move any eigenvalue at double precision.
        if (std::fabs(apq) < 1e-18 * scale) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        kernels::rotate(a.row(p), a.row(q), c, s);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          a(r, p) = a(p, r);
          a(r, q) = a(q, r);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        kernels::rotate(basis.row(p), basis.row(q), c, s);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a(k, k));
    auto v = basis.row(k);
    std::vector<double> vec(v.begin(), v.end());
    std::size_t lead = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (std::fabs(vec[j]) > std::fabs(vec[lead]) * (1.0 + 1e-12)) lead = j;
    if (n > 0 && vec[lead] < 0.0)
      for (double& x : vec) x = -x;
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

bool Cholesky::factor(const Matrix& a, double pivot_tol) {
  const std::size_t n = a.rows();
  lower_ = Matrix(n, n);
  double max_diag = 0.0;
  for (std::size_t k = 0; k < n; ++k) max_diag = std::max(max_diag, std::fabs(a(k, k)));
  const double threshold = pivot_tol * max_diag;
  for (std::size_t j = 0; j < n; ++j) {
    const auto lj = lower_.row(j).first(j);
    const double pivot = a(j, j) - kernels::dot(lj, lj);
    if (!(pivot > threshold)) return false;
    const double d = std::sqrt(pivot);
    lower_(j, j) = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      lower_(i, j) = (a(i, j) - kernels::dot(lower_.row(i).first(j), lj)) / d;
    }
  }
  return true;
}

std::vector<double> Cholesky::solve(std::span<const double> b) const {
  const std::size_t n = lower_.rows();
  std::vector<double> y(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = (y[i] - kernels::dot(lower_.row(i).first(i), std::span<const double>(y).first(i))) / lower_(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    y[i] /= lower_(i, i);
    kernels::axpy(-y[i], lower_.row(i).first(i), std::span<double>(y).first(i));
  }
  return y;
}

}  // namespace steklov

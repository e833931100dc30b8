#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace steklov {

/// Row-major dense matrix; rows are contiguous so the SIMD kernels can work
/// on them directly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transposed() const;
  std::vector<double> multiply(std::span<const double> x) const;
  Matrix multiply(const Matrix& other) const;

  double frobenius_norm() const;
  double max_abs() const;
  /// max |A - A^T|
  double asymmetry() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]; orthonormal
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Each eigenvector is scaled
/// so that its largest-magnitude entry (first one on ties) is positive.
SymmetricEigen symmetric_eigen(const Matrix& a);

/// Cholesky factorisation of a symmetric positive definite matrix.
class Cholesky {
 public:
  /// Returns false when a pivot drops to pivot_tol * max diagonal or below.
  bool factor(const Matrix& a, double pivot_tol = 1e-12);
  std::vector<double> solve(std::span<const double> b) const;
  std::size_t size() const noexcept { return lower_.rows(); }

 private:
  Matrix lower_;
};

}  // namespace steklov

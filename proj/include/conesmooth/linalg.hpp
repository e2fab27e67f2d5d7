#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace conesmooth {

using Vec = std::vector<double>;
using VecView = std::span<const double>;

// Small dense helpers. Sizes here never exceed a few thousand entries, so
// everything is plain loops over contiguous storage.
double dot(VecView a, VecView b);
double norm(VecView a);
double norm_sq(VecView a);
double distance(VecView a, VecView b);
Vec add(VecView a, VecView b);
Vec sub(VecView a, VecView b);
Vec scaled(VecView a, double s);
void axpy(double alpha, VecView x, std::span<double> y);  // y += alpha * x
Vec zeros(std::size_t n);
Vec ones(std::size_t n);
Vec basis(std::size_t n, std::size_t i);
bool all_finite(VecView a);

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  const std::vector<double>& data() const { return data_; }

  Vec apply(VecView x) const;             // A x
  Vec apply_transpose(VecView y) const;   // A^T y
  Matrix transpose() const;
  Matrix multiply(const Matrix& other) const;
  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Eigenpairs of a symmetric matrix, eigenvalues sorted in descending order.
/// vectors(:, k) is the unit eigenvector for values[k].
struct EigenDecomposition {
  Vec values;
  Matrix vectors;
  int sweeps = 0;
};

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-12;  // relative to the Frobenius norm
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver. Throws NumericalError when the off-diagonal
/// mass does not fall below tolerance within max_sweeps.
EigenDecomposition jacobi_eigen(const Matrix& symmetric, const JacobiOptions& options = {});

/// Largest eigenvalue of a symmetric matrix.
double lambda_max(const Matrix& symmetric);

/// Operator (spectral) norm of a rectangular matrix.
double operator_norm(const Matrix& a);

/// Moore-Penrose solve of a symmetric (possibly indefinite or singular) system.
Vec symmetric_pinv_solve(const Matrix& symmetric, VecView rhs, double relative_cutoff = 1e-12);

// Isometric vectorisation of symmetric d x d matrices: entries (i, j) with
// i <= j in row order, off-diagonal entries scaled by sqrt(2). The Euclidean
// inner product of svec images equals the trace inner product.
std::size_t svec_dim(std::size_t order);
std::size_t svec_order(std::size_t dim);  // throws DimensionError if dim is not triangular
Matrix smat(VecView v);
Vec svec(const Matrix& symmetric);
Vec svec_outer(VecView u);  // svec(u u^T)
Vec svec_identity(std::size_t order);

}  // namespace conesmooth

#include "conesmooth/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "conesmooth/error.hpp"

namespace conesmooth {

void require_dim(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(got));
  }
}

void require_finite(std::span<const double> x, const char* what) {
  if (!all_finite(x)) {
    throw InvalidArgument(std::string(what) + ": non-finite input component");
  }
}

double dot(VecView a, VecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_sq(VecView a) { return dot(a, a); }

double norm(VecView a) {
  return std::sqrt(norm_sq(a));
}

double distance(VecView a, VecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vec add(VecView a, VecView b) {
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(VecView a, VecView b) {
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scaled(VecView a, double s) {
  Vec out(a.begin(), a.end());
  for (double& v : out) v *= s;
  return out;
}

void axpy(double alpha, VecView x, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

Vec zeros(std::size_t n) { return Vec(n, 0.0); }
Vec ones(std::size_t n) { return Vec(n, 1.0); }

Vec basis(std::size_t n, std::size_t i) {
  Vec e(n, 0.0);
  e.at(i) = 1.0;
  return e;
}

bool all_finite(VecView a) {
  return std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); });
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec Matrix::apply(VecView x) const {
  require_dim(x.size(), cols_, "Matrix::apply");
  Vec y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(row(i), x);
  return y;
}

Vec Matrix::apply_transpose(VecView y) const {
  require_dim(y.size(), rows_, "Matrix::apply_transpose");
  Vec x(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) axpy(y[i], row(i), x);
  return x;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::multiply(const Matrix& other) const {
  require_dim(other.rows_, cols_, "Matrix::multiply");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

double Matrix::frobenius_norm() const { return norm(data_); }

EigenDecomposition jacobi_eigen(const Matrix& symmetric, const JacobiOptions& options) {
  const std::size_t n = symmetric.rows();
  require_dim(symmetric.cols(), n, "jacobi_eigen");
  Matrix a = symmetric;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = m;
      a(j, i) = m;
    }
  Matrix v = Matrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    if (off_norm() <= options.off_diagonal_tolerance * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == options.max_sweeps && off_norm() > options.off_diagonal_tolerance * scale) {
    throw NumericalError("jacobi_eigen: no convergence within " +
                         std::to_string(options.max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  out.sweeps = sweep;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double lambda_max(const Matrix& symmetric) {
  if (symmetric.rows() == 1) return symmetric(0, 0);
  return jacobi_eigen(symmetric).values.front();
}

double operator_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const Matrix gram = a.cols() <= a.rows() ? a.transpose().multiply(a) : a.multiply(a.transpose());
  return std::sqrt(std::max(0.0, lambda_max(gram)));
}

Vec symmetric_pinv_solve(const Matrix& symmetric, VecView rhs, double relative_cutoff) {
  const std::size_t n = symmetric.rows();
  require_dim(rhs.size(), n, "symmetric_pinv_solve");
  const EigenDecomposition eig = jacobi_eigen(symmetric);
  double largest = 0.0;
  for (double l : eig.values) largest = std::max(largest, std::abs(l));
  const double cutoff = relative_cutoff * std::max(largest, 1e-300);
  Vec x(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double l = eig.values[k];
    if (std::abs(l) <= cutoff) continue;
    double proj = 0.0;
    for (std::size_t i = 0; i < n; ++i) proj += eig.vectors(i, k) * rhs[i];
    proj /= l;
    for (std::size_t i = 0; i < n; ++i) x[i] += proj * eig.vectors(i, k);
  }
  return x;
}

std::size_t svec_dim(std::size_t order) { return order * (order + 1) / 2; }

std::size_t svec_order(std::size_t dim) {
  std::size_t d = 0;
  while (svec_dim(d) < dim) ++d;
  if (svec_dim(d) != dim) {
    throw DimensionError("svec_order: " + std::to_string(dim) + " is not a triangular number");
  }
  return d;
}

Matrix smat(VecView v) {
  const std::size_t d = svec_order(v.size());
  Matrix m(d, d);
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j, ++k) {
      const double value = (i == j) ? v[k] : v[k] / std::sqrt(2.0);
      m(i, j) = value;
      m(j, i) = value;
    }
  return m;
}

Vec svec(const Matrix& symmetric) {
  const std::size_t d = symmetric.rows();
  Vec v(svec_dim(d));
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j, ++k) {
      v[k] = (i == j) ? symmetric(i, i) : std::sqrt(2.0) * 0.5 * (symmetric(i, j) + symmetric(j, i));
    }
  return v;
}

Vec svec_outer(VecView u) {
  const std::size_t d = u.size();
  Vec v(svec_dim(d));
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j, ++k) v[k] = (i == j) ? u[i] * u[i] : std::sqrt(2.0) * u[i] * u[j];
  return v;
}

Vec svec_identity(std::size_t order) { return svec(Matrix::identity(order)); }

}  // namespace conesmooth

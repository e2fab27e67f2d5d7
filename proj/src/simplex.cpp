#include "conesmooth/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "conesmooth/error.hpp"

namespace conesmooth {

SimplexProjection project_simplex(VecView x) {
  const std::size_t n = x.size();
  if (n == 0) throw DimensionError("project_simplex: empty input");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

  double cumulative = 0.0;
  double threshold = 0.0;
  std::size_t active = 0;
  for (std::size_t j = 0; j < n; ++j) {
    cumulative += x[order[j]];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (x[order[j]] - t > 0.0) {
      threshold = t;
      active = j + 1;
    }
  }
  SimplexProjection out;
  out.point.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.point[i] = std::max(x[i] - threshold, 0.0);
  out.threshold = threshold;
  out.active = active;
  return out;
}

namespace {

double objective(const Matrix& g, VecView c, VecView l) {
  const Vec gl = g.apply(l);
  return 0.5 * dot(l, gl) - dot(c, l);
}

Vec gradient(const Matrix& g, VecView c, VecView l) { return sub(g.apply(l), c); }

double gradient_mapping_norm(const Matrix& g, VecView c, VecView l, double lip) {
  const Vec grad = gradient(g, c, l);
  Vec step(l.begin(), l.end());
  axpy(-1.0 / lip, grad, step);
  const Vec p = project_simplex(step).point;
  return lip * distance(l, p);
}

// Exact minimiser on the support of `l`, accepted only if it is optimal for
// the full problem to within `tol`.
bool polish(const Matrix& g, VecView c, Vec& l, double lip, double tol) {
  const std::size_t n = l.size();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (l[i] > 1e-12) support.push_back(i);
  if (support.empty()) return false;
  const std::size_t k = support.size();
  Matrix kkt(k + 1, k + 1);
  Vec rhs(k + 1);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) kkt(a, b) = g(support[a], support[b]);
    kkt(a, k) = 1.0;
    kkt(k, a) = 1.0;
    rhs[a] = c[support[a]];
  }
  rhs[k] = 1.0;
  const Vec sol = symmetric_pinv_solve(kkt, rhs, 1e-13);
  Vec candidate(n, 0.0);
  double total = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    if (sol[a] < -1e-14) return false;
    candidate[support[a]] = std::max(sol[a], 0.0);
    total += candidate[support[a]];
  }
  if (std::abs(total - 1.0) > 1e-9) return false;
  for (double& v : candidate) v /= total;
  if (gradient_mapping_norm(g, c, candidate, lip) > tol) return false;
  if (objective(g, c, candidate) > objective(g, c, l) + 1e-12 * (1.0 + std::abs(objective(g, c, l))))
    return false;
  l = std::move(candidate);
  return true;
}

}  // namespace

SimplexQpResult solve_simplex_qp(const Matrix& gram, VecView c, const SimplexQpOptions& options) {
  const std::size_t n = c.size();
  if (n == 0) throw DimensionError("solve_simplex_qp: empty problem");
  require_dim(gram.rows(), n, "solve_simplex_qp");
  require_dim(gram.cols(), n, "solve_simplex_qp");

  SimplexQpResult result;
  if (n == 1) {
    result.lambda = {1.0};
    result.objective = objective(gram, c, result.lambda);
    return result;
  }

  double lip = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(gram(i, j));
    lip = std::max(lip, row);
  }
  lip = std::max(lip, 1e-12);

  Vec l(n, 1.0 / static_cast<double>(n));
  Vec y = l;
  double t = 1.0;
  double f_prev = objective(gram, c, l);
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (it % 50 == 0) {
      result.gradient_mapping = gradient_mapping_norm(gram, c, l, lip);
      if (result.gradient_mapping <= options.tolerance) break;
      if (it > 0 && it % 500 == 0 && polish(gram, c, l, lip, options.tolerance)) {
        result.gradient_mapping = gradient_mapping_norm(gram, c, l, lip);
        break;
      }
    }
    const Vec grad = gradient(gram, c, y);
    Vec step = y;
    axpy(-1.0 / lip, grad, step);
    Vec next = project_simplex(step).point;
    const double f_next = objective(gram, c, next);
    if (f_next > f_prev && t > 1.0) {
      t = 1.0;
      y = l;
      continue;
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = next;
    axpy((t - 1.0) / t_next, sub(next, l), y);
    l = std::move(next);
    t = t_next;
    f_prev = f_next;
  }
  result.iterations = it;
  if (result.gradient_mapping > options.tolerance) {
    polish(gram, c, l, lip, options.tolerance);
    result.gradient_mapping = gradient_mapping_norm(gram, c, l, lip);
  }
  if (result.gradient_mapping > options.tolerance) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "solve_simplex_qp: gradient mapping %.3g above tolerance %.3g after %d iterations",
                  result.gradient_mapping, options.tolerance, it);
    throw NumericalError(buf);
  }
  result.lambda = std::move(l);
  result.objective = objective(gram, c, result.lambda);
  return result;
}

}  // namespace conesmooth

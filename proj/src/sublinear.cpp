#include "conesmooth/sublinear.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "conesmooth/error.hpp"
#include "conesmooth/simplex.hpp"

namespace conesmooth {

namespace {

const std::map<Family, std::string>& family_names() {
  static const std::map<Family, std::string> names = {
      {Family::ReLU, "relu"},
      {Family::EuclideanNorm, "euclidean-norm"},
      {Family::OneNorm, "one-norm"},
      {Family::WeightedInfNorm, "weighted-inf-norm"},
      {Family::Max, "max"},
      {Family::MaxEigen, "max-eigen"},
      {Family::PolytopeSupport, "polytope"},
  };
  return names;
}

// Projection onto {z : sum_i |z_i| / w_i <= 1}.
Vec project_weighted_cross_polytope(VecView x, const Vec& w) {
  const std::size_t n = x.size();
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) mass += std::abs(x[i]) / w[i];
  if (mass <= 1.0) return Vec(x.begin(), x.end());

  // z_i = sign(x_i) max(|x_i| - t / w_i, 0); coordinate i is active while t < |x_i| w_i.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(x[a]) * w[a] > std::abs(x[b]) * w[b];
  });
  double sum_abs = 0.0;
  double sum_inv_sq = 0.0;
  double t = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    sum_abs += std::abs(x[i]) / w[i];
    sum_inv_sq += 1.0 / (w[i] * w[i]);
    const double candidate = (sum_abs - 1.0) / sum_inv_sq;
    const double next_break = (k + 1 < n) ? std::abs(x[order[k + 1]]) * w[order[k + 1]] : 0.0;
    if (candidate >= next_break) {
      t = candidate;
      break;
    }
  }
  Vec z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::max(std::abs(x[i]) - t / w[i], 0.0);
    z[i] = x[i] < 0.0 ? -mag : mag;
  }
  return z;
}

Vec project_polytope(VecView x, const std::vector<Vec>& vertices) {
  const std::size_t m = vertices.size();
  Matrix gram(m, m);
  Vec c(m);
  for (std::size_t i = 0; i < m; ++i) {
    c[i] = dot(vertices[i], x);
    for (std::size_t j = i; j < m; ++j) {
      gram(i, j) = dot(vertices[i], vertices[j]);
      gram(j, i) = gram(i, j);
    }
  }
  const SimplexQpResult qp = solve_simplex_qp(gram, c);
  Vec z(x.size(), 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (qp.lambda[i] != 0.0) axpy(qp.lambda[i], vertices[i], z);
  return z;
}

}  // namespace

std::string to_string(Family f) { return family_names().at(f); }

Family family_from_string(const std::string& name) {
  for (const auto& [f, n] : family_names())
    if (n == name) return f;
  if (name == "euclidean" || name == "two-norm") return Family::EuclideanNorm;
  if (name == "weighted-inf") return Family::WeightedInfNorm;
  if (name == "polytope-support") return Family::PolytopeSupport;
  throw InvalidArgument("unknown family '" + name + "'");
}

std::string to_string(SupportKind k) {
  switch (k) {
    case SupportKind::Interval: return "interval";
    case SupportKind::Simplex: return "simplex";
    case SupportKind::UnitBall: return "unit-ball";
    case SupportKind::SignedBox: return "signed-box";
    case SupportKind::WeightedCrossPolytope: return "weighted-cross-polytope";
    case SupportKind::SpectralSimplex: return "spectral-simplex";
    case SupportKind::Polytope: return "polytope";
  }
  return "unknown";
}

SublinearFn SublinearFn::relu() {
  SublinearFn f(Family::ReLU, 1);
  f.vertices_ = {{0.0}, {1.0}};
  return f;
}

SublinearFn SublinearFn::euclidean_norm(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("euclidean_norm: dimension must be positive");
  return SublinearFn(Family::EuclideanNorm, dim);
}

SublinearFn SublinearFn::one_norm(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("one_norm: dimension must be positive");
  SublinearFn f(Family::OneNorm, dim);
  f.lipschitz_ = std::sqrt(static_cast<double>(dim));
  return f;
}

SublinearFn SublinearFn::weighted_inf_norm(Vec weights) {
  if (weights.empty()) throw InvalidArgument("weighted_inf_norm: weights must be non-empty");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) throw InvalidArgument("weighted_inf_norm: weights must be positive and finite");
  SublinearFn f(Family::WeightedInfNorm, weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    f.vertices_.push_back(scaled(basis(weights.size(), i), weights[i]));
    f.vertices_.push_back(scaled(basis(weights.size(), i), -weights[i]));
  }
  f.lipschitz_ = *std::max_element(weights.begin(), weights.end());
  f.weights_ = std::move(weights);
  return f;
}

SublinearFn SublinearFn::max(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("max: dimension must be positive");
  SublinearFn f(Family::Max, dim);
  for (std::size_t i = 0; i < dim; ++i) f.vertices_.push_back(basis(dim, i));
  return f;
}

SublinearFn SublinearFn::max_eigen(std::size_t order) {
  if (order == 0) throw InvalidArgument("max_eigen: matrix order must be positive");
  if (order > 64) throw InvalidArgument("max_eigen: matrix order above 64 is not supported");
  SublinearFn f(Family::MaxEigen, svec_dim(order));
  f.order_ = order;
  return f;
}

SublinearFn SublinearFn::polytope_support(std::vector<Vec> vertices) {
  if (vertices.empty()) throw InvalidArgument("polytope_support: at least one vertex is required");
  const std::size_t d = vertices.front().size();
  if (d == 0) throw InvalidArgument("polytope_support: vertices must have positive dimension");
  double lip = 0.0;
  for (const Vec& v : vertices) {
    require_dim(v.size(), d, "polytope_support");
    require_finite(v, "polytope_support");
    lip = std::max(lip, norm(v));
  }
  SublinearFn f(Family::PolytopeSupport, d);
  f.vertices_ = std::move(vertices);
  f.lipschitz_ = lip;
  return f;
}

SupportKind SublinearFn::support_kind() const {
  switch (family_) {
    case Family::ReLU: return SupportKind::Interval;
    case Family::EuclideanNorm: return SupportKind::UnitBall;
    case Family::OneNorm: return SupportKind::SignedBox;
    case Family::WeightedInfNorm: return SupportKind::WeightedCrossPolytope;
    case Family::Max: return SupportKind::Simplex;
    case Family::MaxEigen: return SupportKind::SpectralSimplex;
    case Family::PolytopeSupport: return SupportKind::Polytope;
  }
  return SupportKind::Polytope;
}

void SublinearFn::check(VecView x, const char* what) const {
  require_dim(x.size(), dim_, what);
  require_finite(x, what);
}

double SublinearFn::eval(VecView x) const {
  check(x, "eval_sublinear");
  switch (family_) {
    case Family::ReLU: return std::max(0.0, x[0]);
    case Family::EuclideanNorm: return norm(x);
    case Family::OneNorm: {
      double s = 0.0;
      for (double v : x) s += std::abs(v);
      return s;
    }
    case Family::WeightedInfNorm: {
      double m = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) m = std::max(m, weights_[i] * std::abs(x[i]));
      return m;
    }
    case Family::Max: return *std::max_element(x.begin(), x.end());
    case Family::MaxEigen: return lambda_max(smat(x));
    case Family::PolytopeSupport: {
      double m = dot(vertices_.front(), x);
      for (const Vec& v : vertices_) m = std::max(m, dot(v, x));
      return m;
    }
  }
  return 0.0;
}

Vec SublinearFn::project_support(VecView x) const {
  check(x, "project_support");
  switch (family_) {
    case Family::ReLU: return {std::clamp(x[0], 0.0, 1.0)};
    case Family::EuclideanNorm: {
      const double n = norm(x);
      return n <= 1.0 ? Vec(x.begin(), x.end()) : scaled(x, 1.0 / n);
    }
    case Family::OneNorm: {
      Vec z(x.begin(), x.end());
      for (double& v : z) v = std::clamp(v, -1.0, 1.0);
      return z;
    }
    case Family::WeightedInfNorm: return project_weighted_cross_polytope(x, weights_);
    case Family::Max: return project_simplex(x).point;
    case Family::MaxEigen: {
      const EigenDecomposition eig = jacobi_eigen(smat(x));
      const Vec mu = project_simplex(eig.values).point;
      Matrix z(order_, order_);
      for (std::size_t k = 0; k < order_; ++k) {
        if (mu[k] == 0.0) continue;
        for (std::size_t i = 0; i < order_; ++i)
          for (std::size_t j = 0; j < order_; ++j) z(i, j) += mu[k] * eig.vectors(i, k) * eig.vectors(j, k);
      }
      return svec(z);
    }
    case Family::PolytopeSupport: return project_polytope(x, vertices_);
  }
  return {};
}

Vec SublinearFn::subgradient_at(VecView x) const {
  check(x, "subgradient_at");
  switch (family_) {
    case Family::ReLU: return {x[0] > 0.0 ? 1.0 : 0.0};
    case Family::EuclideanNorm: {
      const double n = norm(x);
      return n == 0.0 ? zeros(dim_) : scaled(x, 1.0 / n);
    }
    case Family::OneNorm: {
      Vec z(dim_);
      for (std::size_t i = 0; i < dim_; ++i) z[i] = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
      return z;
    }
    case Family::Max: {
      const auto it = std::max_element(x.begin(), x.end());
      return basis(dim_, static_cast<std::size_t>(it - x.begin()));
    }
    case Family::MaxEigen: {
      const EigenDecomposition eig = jacobi_eigen(smat(x));
      Vec u(order_);
      for (std::size_t i = 0; i < order_; ++i) u[i] = eig.vectors(i, 0);
      return svec_outer(u);
    }
    case Family::WeightedInfNorm:
    case Family::PolytopeSupport: {
      std::size_t best = 0;
      double best_value = dot(vertices_[0], x);
      for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const double v = dot(vertices_[i], x);
        if (v > best_value) {
          best_value = v;
          best = i;
        }
      }
      return vertices_[best];
    }
  }
  return {};
}

double SublinearFn::price(VecView x) const {
  check(x, "price");
  switch (family_) {
    case Family::ReLU: return std::max(0.0, x[0] + 0.5);
    case Family::EuclideanNorm: return norm(x) + 0.5;
    case Family::OneNorm: return eval(x) + 0.5 * static_cast<double>(dim_);
    case Family::Max:
    case Family::MaxEigen: return eval(x) + 0.5;
    case Family::WeightedInfNorm:
    case Family::PolytopeSupport: {
      double m = -std::numeric_limits<double>::infinity();
      for (const Vec& v : vertices_) m = std::max(m, dot(v, x) + 0.5 * norm_sq(v));
      return m;
    }
  }
  return 0.0;
}

double SublinearFn::moreau(VecView x) const {
  const Vec p = project_support(x);
  return 0.5 * norm_sq(x) - 0.5 * distance(x, p) * distance(x, p);
}

std::optional<std::vector<Vec>> SublinearFn::support_vertices() const {
  switch (family_) {
    case Family::ReLU:
    case Family::WeightedInfNorm:
    case Family::Max:
    case Family::PolytopeSupport: return vertices_;
    case Family::OneNorm: {
      if (dim_ > 12) return std::nullopt;
      std::vector<Vec> out;
      for (std::size_t mask = 0; mask < (std::size_t{1} << dim_); ++mask) {
        Vec v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = (mask >> i) & 1U ? -1.0 : 1.0;
        out.push_back(std::move(v));
      }
      return out;
    }
    case Family::EuclideanNorm:
    case Family::MaxEigen: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Vec> SublinearFn::structured_points() const {
  std::vector<Vec> pts{zeros(dim_)};
  if (auto v = support_vertices(); v && v->size() <= 4096) {
    pts.insert(pts.end(), v->begin(), v->end());
    return pts;
  }
  if (family_ == Family::MaxEigen) {
    for (std::size_t i = 0; i < order_; ++i) pts.push_back(svec_outer(basis(order_, i)));
    return pts;
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    pts.push_back(basis(dim_, i));
    pts.push_back(scaled(basis(dim_, i), -1.0));
  }
  return pts;
}

}  // namespace conesmooth

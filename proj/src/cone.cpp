#include "conesmooth/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "conesmooth/error.hpp"
#include "conesmooth/sampling.hpp"

namespace conesmooth {

std::string to_string(ConeKind k) {
  switch (k) {
    case ConeKind::Orthant: return "orthant";
    case ConeKind::SecondOrder: return "soc";
    case ConeKind::PSD: return "psd";
    case ConeKind::Exponential: return "exp";
    case ConeKind::Lifted: return "lifted";
  }
  return "unknown";
}

ConeKind cone_kind_from_string(const std::string& name) {
  if (name == "orthant" || name == "nonnegative") return ConeKind::Orthant;
  if (name == "soc" || name == "second-order") return ConeKind::SecondOrder;
  if (name == "psd" || name == "sdp") return ConeKind::PSD;
  if (name == "exp" || name == "exponential") return ConeKind::Exponential;
  if (name == "lifted") return ConeKind::Lifted;
  throw InvalidArgument("unknown cone '" + name + "'");
}

ConeModel ConeModel::orthant(std::size_t d) {
  if (d == 0) throw InvalidArgument("orthant: dimension must be positive");
  return ConeModel(ConeKind::Orthant, d, d);
}

ConeModel ConeModel::second_order(std::size_t d) {
  if (d == 0) throw InvalidArgument("second_order: dimension must be positive");
  return ConeModel(ConeKind::SecondOrder, d, d + 1);
}

ConeModel ConeModel::psd(std::size_t order) {
  if (order == 0) throw InvalidArgument("psd: matrix order must be positive");
  if (order > 64) throw InvalidArgument("psd: matrix order above 64 is not supported");
  return ConeModel(ConeKind::PSD, order, svec_dim(order));
}

ConeModel ConeModel::exponential() { return ConeModel(ConeKind::Exponential, 3, 3); }

ConeModel ConeModel::lifted(LiftData data) {
  if (!data.base) throw InvalidArgument("lifted: missing membership oracle");
  if (data.x0.empty()) throw InvalidArgument("lifted: x0 must be non-empty");
  if (!(data.radius > 0.0)) throw InvalidArgument("lifted: radius must be positive");
  ConeModel k(ConeKind::Lifted, data.x0.size(), data.x0.size() + 1);
  k.lift_ = std::make_shared<const LiftData>(std::move(data));
  return k;
}

std::string ConeModel::name() const {
  if (kind_ == ConeKind::Exponential) return "exp";
  return to_string(kind_) + "(" + std::to_string(param_) + ")";
}

double ConeModel::tolerance() const { return kind_ == ConeKind::Exponential ? 1e-6 : 1e-9; }

Vec project_second_order(VecView x) {
  const std::size_t d = x.size() - 1;
  const double t = x[d];
  const double nx = norm(x.subspan(0, d));
  if (nx <= t) return Vec(x.begin(), x.end());
  if (nx <= -t) return zeros(x.size());
  const double a = 0.5 * (nx + t);
  Vec p(x.size());
  for (std::size_t i = 0; i < d; ++i) p[i] = a * x[i] / nx;
  p[d] = a;
  return p;
}

Vec project_psd(VecView x) {
  const Matrix m = smat(x);
  const std::size_t n = m.rows();
  const EigenDecomposition eig = jacobi_eigen(m);
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double l = eig.values[k];
    if (l <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += l * eig.vectors(i, k) * eig.vectors(j, k);
  }
  return svec(out);
}

bool in_exponential(VecView v, double tol) {
  const double x = v[0], y = v[1], z = v[2];
  if (y > 1e-12) return y * std::exp(x / y) <= z + tol;
  if (y < -tol) return false;
  return x <= tol && z >= -tol;
}

namespace {

bool in_exponential_polar(VecView v) {
  // v in polar iff -v in the dual cone {(u, w, s) : u < 0, -u exp(w / u) <= e s} U {u = 0, w, s >= 0}
  const double u = -v[0], w = -v[1], s = -v[2];
  if (u < 0.0) return -u * std::exp(w / u) <= std::exp(1.0) * s;
  if (u == 0.0) return w >= 0.0 && s >= 0.0;
  return false;
}

// Scaled direction of the boundary ray through (rho, 1, e^rho).
Vec exponential_ray(double rho) {
  if (rho > 0.0) {
    const double e = std::exp(-rho);
    return {rho * e, e, 1.0};
  }
  return {rho, 1.0, std::exp(rho)};
}

// Sign of the stationarity residual <v, d(rho) x n(rho)>, rescaled so that it
// stays finite for every rho.
double exponential_residual(VecView v, double rho) {
  const double r = v[0], s = v[1], t = v[2];
  const double q = rho * rho - rho + 1.0;
  if (rho > 0.0) {
    const double e = std::exp(-rho);
    return ((rho - 1.0) * r + s) - (r - rho * s) * e * e - t * q * e;
  }
  const double e = std::exp(rho);
  return ((rho - 1.0) * r + s) * e * e - (r - rho * s) - t * q * e;
}

// Nearest point of the boundary ray whose normal contains v - p.
bool exponential_boundary_candidate(VecView v, Vec& out) {
  const double r = v[0], s = v[1];
  // admissible interval: ((rho - 1) r + s) >= 0 and (r - rho s) >= 0
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  auto restrict = [&](double coef, double constant) {
    if (coef > 0.0) lo = std::max(lo, -constant / coef);
    else if (coef < 0.0) hi = std::min(hi, -constant / coef);
    else if (constant < 0.0) hi = lo - 1.0;
  };
  restrict(r, s - r);
  restrict(-s, r);
  if (!(lo <= hi)) return false;
  constexpr double cap = 1e6;
  lo = std::max(lo, -cap);
  hi = std::min(hi, cap);
  if (!(lo <= hi)) return false;
  double a = lo, b = hi;
  if (!(exponential_residual(v, a) <= 0.0 && exponential_residual(v, b) >= 0.0)) return false;
  for (int it = 0; it < 2000 && b > a; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    if (exponential_residual(v, m) < 0.0) a = m;
    else b = m;
  }
  const Vec d = exponential_ray(0.5 * (a + b));
  const double alpha = dot(v, d) / norm_sq(d);
  if (!(alpha >= 0.0)) return false;
  out = scaled(d, alpha);
  return all_finite(out);
}

}  // namespace

Vec project_exponential(VecView v) {
  require_dim(v.size(), 3, "project_exponential");
  if (in_exponential(v, 0.0)) return Vec(v.begin(), v.end());
  if (in_exponential_polar(v)) return zeros(3);
  std::vector<Vec> candidates;
  candidates.push_back(zeros(3));
  candidates.push_back({std::min(v[0], 0.0), 0.0, std::max(v[2], 0.0)});
  if (v[1] > 0.0) candidates.push_back({v[0], v[1], std::max(v[2], v[1] * std::exp(v[0] / v[1]))});
  Vec b;
  if (exponential_boundary_candidate(v, b)) candidates.push_back(b);
  Vec best = candidates.front();
  double best_dist = distance(best, v);
  for (const Vec& c : candidates) {
    const double d = distance(c, v);
    if (d < best_dist) {
      best = c;
      best_dist = d;
    }
  }
  return best;
}

bool ConeModel::contains(VecView x, double tol) const {
  require_dim(x.size(), ambient_, "cone membership");
  if (!all_finite(x)) return false;
  switch (kind_) {
    case ConeKind::Orthant: return std::all_of(x.begin(), x.end(), [&](double v) { return v >= -tol; });
    case ConeKind::SecondOrder: return norm(x.subspan(0, param_)) <= x[param_] + tol;
    case ConeKind::PSD: {
      const EigenDecomposition eig = jacobi_eigen(smat(x));
      return eig.values.back() >= -tol;
    }
    case ConeKind::Exponential: return in_exponential(x, tol);
    case ConeKind::Lifted: {
      const LiftData& l = *lift_;
      const std::size_t d = param_;
      const VecView xs = x.subspan(0, d);
      const double r = x[d];
      if (r > tol) {
        Vec p = l.x0;
        axpy(1.0 / (r * (1.0 + tol)), xs, p);
        return l.base(p);
      }
      if (r < -tol) return false;
      if (norm(xs) <= tol) return true;
      for (double t = 1.0; t <= l.recession_limit; t *= 10.0) {
        Vec p = l.x0;
        axpy(t, xs, p);
        if (!l.base(p)) return false;
      }
      return true;
    }
  }
  return false;
}

Vec ConeModel::project(VecView x) const {
  require_dim(x.size(), ambient_, "cone projection");
  require_finite(x, "cone projection");
  switch (kind_) {
    case ConeKind::Orthant: {
      Vec p(x.begin(), x.end());
      for (double& v : p) v = std::max(v, 0.0);
      return p;
    }
    case ConeKind::SecondOrder: return project_second_order(x);
    case ConeKind::PSD: return project_psd(x);
    case ConeKind::Exponential: return project_exponential(x);
    case ConeKind::Lifted: break;
  }
  throw UnsupportedError("no projection oracle for lifted cones");
}

double ConeModel::distance_to(VecView x) const { return distance(x, project(x)); }

std::vector<Vec> ConeModel::normal_sampler(std::uint64_t seed, std::size_t n) const {
  std::vector<Vec> out;
  out.reserve(n);
  if (n == 0) return out;
  if (kind_ == ConeKind::Lifted) throw UnsupportedError("normal sampling needs a projection oracle; lifted cones have none");
  if (kind_ == ConeKind::Exponential) {
    out.push_back({0.0, 0.0, -1.0});
    if (n > 1) out.push_back({0.0, -1.0, 0.0});
    const Halton h(1, seed);
    for (std::uint64_t k = 0; out.size() < n; ++k) {
      const double u = h.point(k)[0];
      const double rho = std::tan(M_PI * (u - 0.5));
      Vec z;
      if (rho > 0.0) z = {1.0, 1.0 - rho, -std::exp(-rho)};
      else z = {std::exp(rho), (1.0 - rho) * std::exp(rho), -1.0};
      const double nz = norm(z);
      if (!(nz > 0.0) || !std::isfinite(nz)) continue;
      for (double& c : z) c /= nz;
      out.push_back(std::move(z));
    }
    return out;
  }
  const std::size_t max_attempts = 50 * n + 1000;
  const auto dirs = sphere_points(ambient_, max_attempts, seed);
  for (std::size_t k = 0; k < max_attempts && out.size() < n; ++k) {
    Vec res = sub(dirs[k], project(dirs[k]));
    const double nr = norm(res);
    if (nr < 1e-12) continue;
    for (double& c : res) c /= nr;
    out.push_back(std::move(res));
  }
  if (out.empty()) throw NumericalError("normal_sampler: every sampled point was inside the cone");
  if (out.size() < n) throw NumericalError("normal_sampler: too few points outside the cone");
  return out;
}

std::vector<Vec> ConeModel::member_sampler(std::uint64_t seed, std::size_t n) const {
  std::vector<Vec> out;
  out.reserve(n);
  if (kind_ == ConeKind::Lifted) {
    const LiftData& l = *lift_;
    const auto pts = ball_points(param_, l.radius, n, seed);
    for (const Vec& p : pts) {
      Vec x = p;
      x.push_back(1.0);
      const double nx = norm(x);
      for (double& c : x) c /= nx;
      out.push_back(std::move(x));
    }
    return out;
  }
  if (kind_ == ConeKind::Exponential) {
    out.push_back({-1.0, 0.0, 0.0});
    out.push_back({0.0, 0.0, 1.0});
  }
  const auto dirs = sphere_points(ambient_, 4 * n + 16, seed);
  for (std::size_t k = 0; k < dirs.size() && out.size() < n; ++k) {
    Vec p = project(dirs[k]);
    const double np = norm(p);
    if (np < 1e-12) continue;
    for (double& c : p) c /= np;
    out.push_back(std::move(p));
  }
  return out;
}

Vec ConeModel::interior_point() const {
  switch (kind_) {
    case ConeKind::Orthant: return ones(ambient_);
    case ConeKind::SecondOrder: {
      Vec x = zeros(ambient_);
      x.back() = 1.0;
      return x;
    }
    case ConeKind::PSD: return svec_identity(param_);
    case ConeKind::Exponential: return {-1.0, 1.0, 1.0};
    case ConeKind::Lifted: {
      Vec x = zeros(ambient_);
      x.back() = 1.0;
      return x;
    }
  }
  return {};
}

}  // namespace conesmooth

#include "conesmooth/composite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "conesmooth/error.hpp"

namespace conesmooth {

SmoothMap SmoothMap::affine(Matrix a, Vec b) {
  require_dim(b.size(), a.rows(), "SmoothMap::affine");
  SmoothMap g;
  g.in_dim = a.cols();
  g.out_dim = a.rows();
  g.M = operator_norm(a);
  g.L = 0.0;
  auto shared = std::make_shared<const Matrix>(std::move(a));
  auto offset = std::make_shared<const Vec>(std::move(b));
  g.eval = [shared, offset](VecView x) { return add(shared->apply(x), *offset); };
  g.jacobian = [shared](VecView) { return *shared; };
  return g;
}

SmoothMap SmoothMap::identity(std::size_t d) { return affine(Matrix::identity(d), zeros(d)); }

std::string to_string(Surrogate s) {
  switch (s) {
    case Surrogate::OptimalGeneral: return "optimal-general";
    case Surrogate::OptimalInner: return "optimal";
    case Surrogate::OptimalOuter: return "optimal-outer";
    case Surrogate::LogSumExp: return "logsumexp";
  }
  return "unknown";
}

Surrogate surrogate_from_string(const std::string& name) {
  if (name == "optimal" || name == "optimal-inner") return Surrogate::OptimalInner;
  if (name == "optimal-general") return Surrogate::OptimalGeneral;
  if (name == "optimal-outer") return Surrogate::OptimalOuter;
  if (name == "logsumexp" || name == "lse") return Surrogate::LogSumExp;
  throw InvalidArgument("unknown surrogate '" + name + "'");
}

double log_sum_exp(VecView z, double eta) {
  const double m = *std::max_element(z.begin(), z.end());
  double s = 0.0;
  for (double v : z) s += std::exp((v - m) / eta);
  return m + eta * std::log(s);
}

Vec log_sum_exp_grad(VecView z, double eta) {
  const double m = *std::max_element(z.begin(), z.end());
  Vec g(z.size());
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    g[i] = std::exp((z[i] - m) / eta);
    s += g[i];
  }
  for (double& v : g) v /= s;
  return g;
}

CompositeSmoothing::CompositeSmoothing(SublinearFn sigma, SmoothMap map, double beta_target, Surrogate surrogate)
    : sigma_(std::move(sigma)), map_(std::move(map)), beta_target_(beta_target), surrogate_(surrogate) {
  if (!map_.eval || !map_.jacobian) throw InvalidArgument("CompositeSmoothing: map needs eval and jacobian");
  require_dim(map_.out_dim, sigma_.dim(), "CompositeSmoothing");
  if (!(map_.M > 0.0)) throw InvalidArgument("CompositeSmoothing: map Lipschitz constant must be positive");
  const double floor = sigma_.lipschitz() * map_.L;
  if (!(beta_target > floor) || !std::isfinite(beta_target))
    throw InvalidArgument("CompositeSmoothing: beta must exceed M_sigma * L");
  inner_beta_ = (beta_target - floor) / (map_.M * map_.M);
  switch (surrogate) {
    case Surrogate::OptimalGeneral: spec_.emplace(sigma_, Variant::MinGeneral, inner_beta_); break;
    case Surrogate::OptimalInner: spec_.emplace(sigma_, Variant::MinInner, inner_beta_); break;
    case Surrogate::OptimalOuter: spec_.emplace(sigma_, Variant::MinOuter, inner_beta_); break;
    case Surrogate::LogSumExp:
      if (sigma_.family() != Family::Max) throw InvalidArgument("CompositeSmoothing: LogSumExp smooths max only");
      break;
  }
}

double CompositeSmoothing::surrogate_distance() const {
  if (spec_) return spec_->distance_bound();
  return eta() * std::log(static_cast<double>(sigma_.dim()));
}

double CompositeSmoothing::value(VecView x) const {
  const Vec z = map_.eval(x);
  return spec_ ? spec_->value(z) : log_sum_exp(z, eta());
}

std::pair<double, Vec> CompositeSmoothing::value_grad(VecView x) const {
  require_dim(x.size(), map_.in_dim, "composite_value_grad");
  require_finite(x, "composite_value_grad");
  const Vec z = map_.eval(x);
  double v;
  Vec gz;
  if (spec_) {
    v = spec_->value(z);
    gz = spec_->gradient(z);
  } else {
    v = log_sum_exp(z, eta());
    gz = log_sum_exp_grad(z, eta());
  }
  if (!std::isfinite(v)) throw NumericalError("composite_value_grad: non-finite value");
  return {v, map_.jacobian(x).apply_transpose(gz)};
}

double CompositeSmoothing::objective(VecView x) const { return sigma_.eval(map_.eval(x)); }

std::pair<double, Vec> composite_value_grad(const CompositeSmoothing& c, VecView x) { return c.value_grad(x); }

Certificate smoothability_certificate(const CompositeSmoothing& c) {
  const double m2 = c.map().M * c.map().M;
  const double delta = c.sigma().lipschitz() * c.map().L;
  switch (c.surrogate()) {
    case Surrogate::OptimalGeneral: return {0.5 * m2 * compute_core(c.sigma()).width, delta};
    case Surrogate::OptimalInner:
    case Surrogate::OptimalOuter: return {m2 * compute_core(c.sigma()).width, delta};
    case Surrogate::LogSumExp: return {m2 * std::log(static_cast<double>(c.sigma().dim())), delta};
  }
  return {};
}

BenchRecord accelerated_minimize(const CompositeSmoothing& c, VecView x0, double eps, int max_iter,
                                 std::optional<double> f_star) {
  if (!(eps > 0.0)) throw InvalidArgument("accelerated_minimize: eps must be positive");
  if (max_iter < 0) throw InvalidArgument("accelerated_minimize: max_iter must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  const double beta = c.beta_target();
  BenchRecord rec;
  rec.surrogate = c.surrogate();
  rec.n = c.map().out_dim;
  rec.d = c.map().in_dim;
  rec.epsilon = eps;
  rec.eta = c.eta();
  rec.beta = beta;
  rec.gap_known = f_star.has_value();

  auto done = [&](VecView x, const Vec& grad) {
    if (f_star) return c.objective(x) - *f_star <= eps;
    return norm(grad) <= eps * beta / 10.0;
  };

  Vec x(x0.begin(), x0.end());
  Vec y = x;
  double t = 1.0;
  auto [hy, gy] = c.value_grad(y);
  int k = 0;
  if (!done(x, gy)) {
    for (k = 1;; ++k) {
      if (k > max_iter) throw NumericalError("accelerated_minimize: max_iter exceeded");
      Vec next = y;
      axpy(-1.0 / beta, gy, next);
      auto [hn, gn] = c.value_grad(next);
      const double lower = hy + dot(gy, sub(next, y));
      if (hn < lower - 1e-9 * (1.0 + std::abs(hn)))
        throw NumericalError("accelerated_minimize: gradient inequality violated, objective is not convex");
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      Vec step = sub(next, x);
      x = std::move(next);
      if (done(x, gn)) break;
      y = x;
      axpy((t - 1.0) / t_next, step, y);
      t = t_next;
      std::tie(hy, gy) = c.value_grad(y);
    }
  }
  rec.iterations = k;
  rec.final_gap = f_star ? c.objective(x) - *f_star : norm(c.value_grad(x).second);
  rec.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string MinimaxInstance::descriptor() const {
  std::ostringstream os;
  os << "planted-minimax(n=" << n() << ",d=" << d() << ",seed=" << seed << ")";
  return os.str();
}

MinimaxInstance planted_minimax(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d == 0) throw InvalidArgument("planted_minimax: d must be positive");
  if (n < d + 1) throw InvalidArgument("planted_minimax: need n >= d + 1 rows");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  MinimaxInstance inst;
  inst.seed = seed;
  inst.f_star = 1.0;
  inst.a = Matrix(n, d);
  inst.b = Vec(n);
  inst.x_star = Vec(d);
  for (double& v : inst.x_star) v = normal(rng);

  const std::size_t active = d + 1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) inst.a(i, j) = scale * normal(rng);

  Vec weights(active);
  for (double& w : weights) w = 0.5 + unif(rng);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  Vec mean(d, 0.0);
  for (std::size_t i = 0; i < active; ++i) axpy(weights[i], inst.a.row(i), mean);
  for (std::size_t i = 0; i < active; ++i) axpy(-1.0, mean, inst.a.row(i));

  for (std::size_t i = 0; i < n; ++i) {
    const double gap = i < active ? 0.0 : 0.1 + 0.9 * unif(rng);
    inst.b[i] = inst.f_star - gap - dot(inst.a.row(i), inst.x_star);
  }
  return inst;
}

CompositeSmoothing minimax_smoothing(const MinimaxInstance& inst, double eps, Surrogate surrogate) {
  if (!(eps > 0.0)) throw InvalidArgument("minimax_smoothing: eps must be positive");
  SmoothMap g = SmoothMap::affine(inst.a, inst.b);
  SublinearFn sigma = SublinearFn::max(inst.n());
  const double m2 = g.M * g.M;
  double inner_beta = 0.0;
  if (surrogate == Surrogate::LogSumExp) {
    inner_beta = 2.0 * std::log(static_cast<double>(inst.n())) / eps;
  } else {
    const SmoothingSpec unit(sigma, surrogate == Surrogate::OptimalGeneral
                                        ? Variant::MinGeneral
                                        : (surrogate == Surrogate::OptimalOuter ? Variant::MinOuter : Variant::MinInner),
                             1.0);
    inner_beta = unit.lambda() / (0.5 * eps);
  }
  return CompositeSmoothing(std::move(sigma), std::move(g), m2 * inner_beta, surrogate);
}

BenchRecord bench_minimax(const MinimaxInstance& inst, double eps, Surrogate surrogate, int max_iter) {
  const CompositeSmoothing c = minimax_smoothing(inst, eps, surrogate);
  BenchRecord rec = accelerated_minimize(c, zeros(inst.d()), eps, max_iter, inst.f_star);
  rec.instance = inst.descriptor();
  return rec;
}

}  // namespace conesmooth

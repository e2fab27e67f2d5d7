#include "conesmooth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "conesmooth/composite.hpp"
#include "conesmooth/error.hpp"
#include "conesmooth/function_smoothing.hpp"
#include "conesmooth/sampling.hpp"
#include "conesmooth/sublinear.hpp"

namespace conesmooth {

namespace {

constexpr double kLipschitzSlack = 1e-6;

std::string beta_tag(double beta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "beta=%g", beta);
  return buf;
}

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += '/';
    out += p;
  }
  return out;
}

double relative(double v, double scale) { return v / (1.0 + std::abs(scale)); }

std::vector<Vec> probe_points(std::size_t dim, double radius, std::size_t n, std::uint64_t seed) {
  std::vector<Vec> pts = ball_points(dim, radius, n, seed);
  pts.push_back(zeros(dim));
  return pts;
}

// Worst relative distance from points P_a(y) of a to the set b.
CheckReport inclusion_check(std::string name, const SetOracle& a, const SetOracle& b, double radius,
                            std::size_t samples, std::uint64_t seed, double tolerance) {
  double worst = 0.0;
  const std::vector<Vec> pts = probe_points(a.dim, radius, samples, seed);
  for (const Vec& y : pts) {
    const Vec p = a.project(y);
    worst = std::max(worst, relative(distance(p, b.project(p)), norm(p)));
  }
  return make_report(std::move(name), pts.size(), worst, tolerance, seed);
}

Field field_of(const SmoothingSpec& s) {
  auto p = std::make_shared<const SmoothingSpec>(s);
  return {s.base().dim(), [p](VecView x) { return p->value(x); }, [p](VecView x) { return p->gradient(x); }};
}

CheckReport lipschitz_report(std::string name, double estimate, double beta, std::size_t pairs,
                             std::uint64_t seed) {
  return make_report(std::move(name), pairs, std::max(0.0, estimate - beta) / beta, kLipschitzSlack, seed);
}

std::vector<SublinearFn> suite_families() {
  return {SublinearFn::relu(),
          SublinearFn::euclidean_norm(2),
          SublinearFn::one_norm(3),
          SublinearFn::weighted_inf_norm({1.0, 2.0}),
          SublinearFn::max(5),
          SublinearFn::max_eigen(2),
          SublinearFn::polytope_support({{1.0, 0.0}, {0.0, 1.0}, {-1.0, -2.0}, {2.0, -1.0}})};
}

std::vector<ConeModel> suite_cones() {
  return {ConeModel::orthant(3), ConeModel::second_order(2), ConeModel::psd(2), ConeModel::exponential()};
}

constexpr Variant kVariants[] = {Variant::MinInner, Variant::MaxInner, Variant::MinGeneral,
                                 Variant::MaxGeneral, Variant::MinOuter, Variant::MaxOuter};

Variant minimal_of(Variant v) {
  if (is_inner(v)) return Variant::MinInner;
  if (is_outer(v)) return Variant::MinOuter;
  return Variant::MinGeneral;
}

void function_checks(const SublinearFn& f, double beta, std::uint64_t seed, std::vector<CheckReport>& out) {
  auto core = std::make_shared<const FunctionalCore>(compute_core(f));
  const double radius = 4.0 * (1.0 + f.lipschitz() + norm(core->center)) / beta;
  const std::size_t dim = f.dim();
  const auto sigma = [f](VecView x) { return f.eval(x); };
  const std::string base = join({"functions", f.name(), beta_tag(beta)});

  for (Variant v : kVariants) {
    const SmoothingSpec s(core, v, beta);
    const Field fs = field_of(s);
    const std::string tag = join({base, to_string(v)});
    const auto sv = [fs](VecView x) { return fs.value(x); };

    if (is_inner(v)) {
      out.push_back(sandwich_check(sigma, sv, dim, 400, seed, radius));
      out.back().name = join({tag, "dominates"});
    }
    if (is_outer(v)) {
      out.push_back(sandwich_check(sv, sigma, dim, 400, seed, radius));
      out.back().name = join({tag, "minorizes"});
    }

    if (is_maximal(v)) {
      const SmoothingSpec m(core, minimal_of(v), beta);
      out.push_back(sandwich_check(sv, [m](VecView x) { return m.value(x); }, dim, 400, seed, radius));
      out.back().name = join({tag, "below-minimal"});
    }

    if (!is_inner(v)) {
      const SmoothingSpec in(core, is_maximal(v) ? Variant::MaxInner : Variant::MinInner, beta);
      const double shift = s.offset() / beta;
      double worst = 0.0;
      const std::vector<Vec> pts = probe_points(dim, radius, 400, seed);
      for (const Vec& x : pts) worst = std::max(worst, relative(std::abs(s.value(x) + shift - in.value(x)), in.value(x)));
      out.push_back(make_report(join({tag, "offset"}), pts.size(), worst, 1e-9, seed));
    }

    const double est = estimate_distance(s, radius, 400, seed);
    out.push_back(make_report(join({tag, "distance"}), 400, std::max(0.0, est - s.distance_bound()) / s.distance_bound(),
                              1e-6, seed));

    out.push_back(lipschitz_report(join({tag, "gradient-lipschitz"}),
                                   lipschitz_grad_estimate(fs, radius, 400, seed), beta, 400, seed));
    CheckReport q = quadratic_upper_check(fs, beta, 400, seed, radius);
    q.name = join({tag, "quadratic-upper"});
    out.push_back(q);
    CheckReport fd = finite_difference_check(fs, 200, seed, radius);
    fd.name = join({tag, "finite-difference"});
    out.push_back(fd);
  }
}

void cone_checks(const ConeModel& k, double beta, std::uint64_t seed, std::vector<CheckReport>& out) {
  auto core = std::make_shared<const ConicCore>(cone_core(k));
  const double radius = 4.0 * (1.0 + norm(core->center)) / beta;
  const SetOracle cone = cone_oracle(k);
  const std::string base = join({"cones", k.name(), beta_tag(beta)});
  const SmoothedSet min_inner(core, Variant::MinInner, beta);

  for (Variant v : kVariants) {
    const SmoothedSet s(core, v, beta);
    const SetOracle so = s.oracle();
    const std::string tag = join({base, to_string(v)});

    if (is_inner(v)) out.push_back(inclusion_check(join({tag, "inside-cone"}), so, cone, radius, 200, seed, 1e-6));
    if (is_outer(v)) out.push_back(inclusion_check(join({tag, "contains-cone"}), cone, so, radius, 200, seed, 1e-6));
    if (is_maximal(v)) {
      const SetOracle m = SmoothedSet(core, minimal_of(v), beta).oracle();
      out.push_back(inclusion_check(join({tag, "contains-minimal"}), m, so, radius, 200, seed, 1e-6));
    }

    if (!is_maximal(v) && !is_inner(v)) {
      const Vec t = scaled(core->center, (1.0 - 1.0 / s.rescale()) / beta);
      double worst = 0.0;
      const std::vector<Vec> pts = probe_points(so.dim, radius, 200, seed);
      for (const Vec& y : pts) {
        const Vec direct = s.project(y).point;
        const Vec via = sub(min_inner.project(add(y, t)).point, t);
        worst = std::max(worst, relative(distance(direct, via), norm(y)));
      }
      out.push_back(make_report(join({tag, "offset"}), pts.size(), worst, 1e-9, seed));
    }

    const double h = hausdorff_estimate(s, radius, 100, seed);
    out.push_back(make_report(join({tag, "hausdorff"}), 100, std::max(0.0, h - s.distance_bound()) / s.distance_bound(),
                              1e-6, seed));

    CheckReport sm = set_smoothness_check(so, beta, 100, seed, radius);
    sm.name = join({tag, "inscribed-balls"});
    out.push_back(sm);
    out.push_back(lipschitz_report(join({tag, "normal-lipschitz"}), normal_lipschitz_estimate(so, 200, seed, radius),
                                   beta, 200, seed));
  }
}

Matrix seeded_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Matrix a(rows, cols);
  const Halton h(cols, seed);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vec p = h.point(i);
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = 2.0 * p[j] - 1.0;
  }
  return a;
}

void composite_checks(const std::string& label, const SublinearFn& sigma, const SmoothMap& g, double beta,
                      std::uint64_t seed, std::vector<CheckReport>& out) {
  for (Surrogate sur : {Surrogate::OptimalGeneral, Surrogate::OptimalInner, Surrogate::OptimalOuter, Surrogate::LogSumExp}) {
    const CompositeSmoothing c(sigma, g, beta, sur);
    const Certificate cert = smoothability_certificate(c);
    const std::string tag = join({"composite", label, to_string(sur), beta_tag(beta)});
    const double radius = 4.0;
    auto cp = std::make_shared<const CompositeSmoothing>(c);
    const Field f{g.in_dim, [cp](VecView x) { return cp->value(x); }, [cp](VecView x) { return cp->value_grad(x).second; }};

    const double bound = cert.delta + g.M * g.M * c.inner_beta();
    const double lip = lipschitz_grad_estimate(f, radius, 400, seed);
    out.push_back(make_report(join({tag, "gradient-lipschitz"}), 400, std::max(0.0, lip - bound) / bound, 1e-4, seed));

    const double gap_bound = cert.lambda / (beta - cert.delta);
    double worst = 0.0;
    const std::vector<Vec> pts = probe_points(g.in_dim, radius, 400, seed);
    for (const Vec& x : pts) worst = std::max(worst, std::abs(c.value(x) - c.objective(x)) - gap_bound);
    out.push_back(make_report(join({tag, "value-gap"}), pts.size(), std::max(0.0, worst), 1e-6, seed));
  }
}

}  // namespace

CheckReport make_report(std::string name, std::size_t n, double worst, double tol, std::uint64_t seed) {
  return {std::move(name), n, worst, tol, worst <= tol, seed};
}

double lipschitz_grad_estimate(const Field& f, double radius, std::size_t pairs, std::uint64_t seed) {
  if (pairs < 1) throw InvalidArgument("lipschitz_grad_estimate: pairs must be at least 1");
  const std::size_t near = (pairs + 1) / 2;
  std::vector<std::pair<Vec, Vec>> all = nearby_pairs(f.dim, radius, near, seed);
  const std::vector<Vec> a = ball_points(f.dim, radius, pairs - near, seed + 1);
  const std::vector<Vec> b = ball_points(f.dim, radius, pairs - near, seed + 2);
  for (std::size_t i = 0; i < a.size(); ++i) all.emplace_back(a[i], b[i]);
  double best = 0.0;
  for (const auto& [x, y] : all) {
    const double dxy = distance(x, y);
    if (dxy == 0.0) continue;
    best = std::max(best, distance(f.gradient(x), f.gradient(y)) / dxy);
  }
  return best;
}

CheckReport quadratic_upper_check(const Field& f, double beta, std::size_t samples, std::uint64_t seed, double radius,
                                  double tolerance) {
  if (!(beta > 0.0)) throw InvalidArgument("quadratic_upper_check: beta must be positive");
  double worst = 0.0;
  const auto pairs = nearby_pairs(f.dim, radius, samples, seed);
  for (const auto& [x, y] : pairs) {
    const Vec dxy = sub(y, x);
    const double fy = f.value(y);
    const double model = f.value(x) + dot(f.gradient(x), dxy) + 0.5 * beta * norm_sq(dxy);
    worst = std::max(worst, relative(fy - model, fy));
  }
  return make_report("quadratic-upper", pairs.size(), worst, tolerance, seed);
}

CheckReport sandwich_check(const std::function<double(VecView)>& lo, const std::function<double(VecView)>& hi,
                           std::size_t dim, std::size_t samples, std::uint64_t seed, double radius, double tolerance) {
  double worst = -std::numeric_limits<double>::infinity();
  const std::vector<Vec> pts = probe_points(dim, radius, samples, seed);
  for (const Vec& x : pts) {
    const double h = hi(x);
    worst = std::max(worst, relative(lo(x) - h, h));
  }
  return make_report("sandwich", pts.size(), worst, tolerance, seed);
}

CheckReport finite_difference_check(const Field& f, std::size_t samples, std::uint64_t seed, double radius, double step,
                                    double tolerance) {
  double worst = 0.0;
  const std::vector<Vec> pts = ball_points(f.dim, radius, samples, seed);
  for (const Vec& x : pts) {
    const Vec g = f.gradient(x);
    Vec fd(f.dim);
    Vec xp = x;
    for (std::size_t i = 0; i < f.dim; ++i) {
      xp[i] = x[i] + step;
      const double up = f.value(xp);
      xp[i] = x[i] - step;
      const double down = f.value(xp);
      xp[i] = x[i];
      fd[i] = (up - down) / (2.0 * step);
    }
    worst = std::max(worst, distance(g, fd) / std::max(1.0, norm(g)));
  }
  return make_report("finite-difference", pts.size(), worst, tolerance, seed);
}

namespace {

// Outside points y of s paired with their projection and outward unit normal.
struct BoundarySample {
  Vec point;
  Vec normal;
};

std::optional<BoundarySample> boundary_from(const SetOracle& s, VecView y) {
  if (s.contains(y)) return std::nullopt;
  BoundarySample b{s.project(y), {}};
  const Vec r = sub(y, b.point);
  const double n = norm(r);
  if (n <= 1e-12 * (1.0 + norm(y))) return std::nullopt;
  b.normal = scaled(r, 1.0 / n);
  return b;
}

}  // namespace

CheckReport set_smoothness_check(const SetOracle& s, double beta, std::size_t boundary_samples, std::uint64_t seed,
                                 double radius, double tolerance) {
  if (!(beta > 0.0)) throw InvalidArgument("set_smoothness_check: beta must be positive");
  if (!s.contains || !s.project) throw InvalidArgument("set_smoothness_check: set needs membership and projection");
  const std::vector<Vec> dirs = sphere_points(s.dim, 24, seed + 17);
  double worst = 0.0;
  std::size_t used = 0;
  const std::vector<Vec> cloud = ball_points(s.dim, radius, 8 * boundary_samples, seed);
  for (const Vec& y : cloud) {
    if (used == boundary_samples) break;
    const auto b = boundary_from(s, y);
    if (!b) continue;
    ++used;
    const Vec c = sub(b->point, scaled(b->normal, 1.0 / beta));
    auto probe = [&](VecView u) {
      Vec p = c;
      axpy(1.0 / beta, u, p);
      if (s.contains(p)) return;
      worst = std::max(worst, relative(distance(p, s.project(p)), norm(p)));
    };
    probe(b->normal);
    probe(scaled(b->normal, -1.0));
    for (const Vec& u : dirs) probe(u);
  }
  if (used == 0) throw NumericalError("set_smoothness_check: no sampled point lies outside the set");
  return make_report("inscribed-balls", used, worst, tolerance, seed);
}

double normal_lipschitz_estimate(const SetOracle& s, std::size_t pairs, std::uint64_t seed, double radius) {
  double best = 0.0;
  for (const auto& [y1, y2] : nearby_pairs(s.dim, radius, pairs, seed)) {
    const auto a = boundary_from(s, y1);
    const auto b = boundary_from(s, y2);
    if (!a || !b) continue;
    const double dx = distance(a->point, b->point);
    if (dx <= 1e-6 * (1.0 + norm(a->point))) continue;
    best = std::max(best, distance(a->normal, b->normal) / dx);
  }
  return best;
}

std::vector<CheckReport> function_suite(std::uint64_t seed, const std::vector<double>& betas) {
  std::vector<CheckReport> out;
  for (const SublinearFn& f : suite_families())
    for (double beta : betas) function_checks(f, beta, seed, out);
  return out;
}

std::vector<CheckReport> cone_suite(std::uint64_t seed, const std::vector<double>& betas) {
  std::vector<CheckReport> out;
  for (const ConeModel& k : suite_cones())
    for (double beta : betas) cone_checks(k, beta, seed, out);
  return out;
}

std::vector<CheckReport> composite_suite(std::uint64_t seed) {
  std::vector<CheckReport> out;
  const std::size_t n = 6;
  const std::size_t d = 3;
  const Matrix a = seeded_matrix(n, d, seed);
  Vec b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = 0.1 * static_cast<double>(i);
  const SublinearFn sigma = SublinearFn::max(n);
  for (double beta : {1.0, 4.0}) composite_checks("affine", sigma, SmoothMap::affine(a, b), beta, seed, out);

  Vec c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = 0.5 * a(i, 0);
  SmoothMap g;
  g.in_dim = d;
  g.out_dim = n;
  g.eval = [a, b, c](VecView x) {
    Vec y = a.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i] + c[i] * std::sin(x[0]);
    return y;
  };
  g.jacobian = [a, c](VecView x) {
    Matrix j = a;
    for (std::size_t i = 0; i < j.rows(); ++i) j(i, 0) += c[i] * std::cos(x[0]);
    return j;
  };
  g.L = norm(c);
  g.M = operator_norm(a) + g.L;
  const double beta = sigma.lipschitz() * g.L + 2.0;
  composite_checks("sine", sigma, g, beta, seed, out);
  return out;
}

std::vector<CheckReport> run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "functions") return function_suite(seed);
  if (suite == "cones") return cone_suite(seed);
  if (suite == "composite") return composite_suite(seed);
  if (suite == "all") {
    std::vector<CheckReport> out = function_suite(seed);
    for (auto& part : {cone_suite(seed), composite_suite(seed)}) out.insert(out.end(), part.begin(), part.end());
    return out;
  }
  throw InvalidArgument("unknown suite '" + suite + "' (expected functions, cones, composite or all)");
}

}  // namespace conesmooth

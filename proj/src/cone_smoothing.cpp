#include "conesmooth/cone_smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "conesmooth/error.hpp"
#include "conesmooth/sampling.hpp"

namespace conesmooth {

namespace {

constexpr std::size_t kExpNormals = 20000;
constexpr std::uint64_t kExpSeed = 7;
constexpr int kBisectionSteps = 80;

ConicCore exponential_core() {
  static std::once_flag once;
  static ConicCore cached{ConeModel::exponential(), {}, 0.0, false, Provenance::Numeric, nullptr};
  std::call_once(once, [] {
    auto est = std::make_shared<const CoreEstimate>(estimate_core(ConeModel::exponential(), kExpNormals, kExpSeed));
    cached.center = est->center_estimate;
    cached.width = est->width_estimate;
    cached.unique = uniqueness_probe(*est, 1000);
    cached.estimate = std::move(est);
  });
  return cached;
}

double distance_to_set(const SetOracle& s, VecView x) { return distance(x, s.project(x)); }

// Last point inside the set on the ray c + t u, t in [0, 2 radius], or empty
// if the ray never leaves the set within the bracket.
Vec boundary_along(const SetOracle& s, VecView u, double radius) {
  const Vec& c = s.interior;
  auto at = [&](double t) {
    Vec p = c;
    axpy(t, u, p);
    return p;
  };
  double lo = 0.0;
  double hi = 2.0 * radius;
  if (s.contains(at(hi))) return {};
  for (int i = 0; i < kBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (s.contains(at(mid))) lo = mid;
    else hi = mid;
  }
  return at(lo);
}

}  // namespace

ConicCore cone_core(const ConeModel& k) {
  const std::size_t d = k.param();
  switch (k.kind()) {
    case ConeKind::Orthant:
      return {k, ones(d), std::sqrt(static_cast<double>(d)) - 1.0, true, Provenance::ClosedForm, nullptr};
    case ConeKind::SecondOrder: {
      Vec c = zeros(d + 1);
      c[d] = std::sqrt(2.0);
      return {k, c, std::sqrt(2.0) - 1.0, true, Provenance::ClosedForm, nullptr};
    }
    case ConeKind::PSD:
      return {k, svec_identity(d), std::sqrt(static_cast<double>(d)) - 1.0, true, Provenance::ClosedForm, nullptr};
    case ConeKind::Exponential: return exponential_core();
    case ConeKind::Lifted: {
      const double r = k.lift()->radius;
      Vec c = zeros(k.ambient_dim());
      c.back() = std::sqrt(1.0 + r * r) / r;
      return {k, c, norm(c) - 1.0, false, Provenance::Certified, nullptr};
    }
  }
  throw UnsupportedError("cone_core: unknown cone");
}

bool core_membership(const ConicCore& c, VecView x, std::size_t ball_samples) {
  require_dim(x.size(), c.cone.ambient_dim(), "core_membership");
  require_finite(x, "core_membership");
  if (c.provenance == Provenance::ClosedForm) return c.cone.contains(sub(x, c.center), 1e-9);
  if (c.estimate) {
    for (const Vec& z : c.estimate->normals)
      if (dot(z, x) > -1.0 + 1e-8) return false;
    return true;
  }
  if (ball_samples == 0) throw InvalidArgument("core_membership: ball_samples must be positive");
  if (!c.cone.contains(x)) return false;
  for (const Vec& s : sphere_points(c.cone.ambient_dim(), ball_samples, 31337)) {
    if (!c.cone.contains(add(x, s))) return false;
  }
  return true;
}

SmoothedSet::SmoothedSet(std::shared_ptr<const ConicCore> core, Variant variant, double beta)
    : core_(std::move(core)), variant_(variant), beta_(beta) {
  if (!core_) throw InvalidArgument("SmoothedSet: missing core");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("SmoothedSet: beta must be positive and finite");
  if (is_maximal(variant_) && !core_->unique) {
    if (!core_->estimate) throw UnsupportedError("SmoothedSet: no core description for " + core_->cone.name());
    polytope_ = std::make_shared<const Halfspaces>(core_->estimate->halfspaces());
  }
}

SmoothedSet::SmoothedSet(const ConeModel& k, Variant variant, double beta)
    : SmoothedSet(std::make_shared<const ConicCore>(cone_core(k)), variant, beta) {}

double SmoothedSet::lambda() const {
  const double w = core_->width;
  if (is_inner(variant_)) return w;
  if (is_outer(variant_)) return w / (1.0 + w);
  return w / (2.0 + w);
}

double SmoothedSet::ball_radius() const { return rescale(); }

double SmoothedSet::rescale() const {
  const double w = core_->width;
  if (is_inner(variant_)) return 1.0;
  if (is_outer(variant_)) return 1.0 + w;
  return 1.0 + 0.5 * w;
}

SetProjection SmoothedSet::project_base(VecView z) const {
  const ConicCore& c = *core_;
  if (polytope_) return {project_polyhedron(*polytope_, z).point, true};
  const Vec shifted = sub(z, c.center);
  return {add(c.cone.project(shifted), c.center), false};
}

SetProjection SmoothedSet::project(VecView y) const {
  require_dim(y.size(), cone().ambient_dim(), "project_smoothed");
  require_finite(y, "project_smoothed");
  const double c = 1.0 / (rescale() * beta_);
  const Vec z = scaled(y, 1.0 / c);
  SetProjection base = project_base(z);
  Vec offset = sub(z, base.point);
  const double n = norm(offset);
  const double rho = ball_radius();
  if (n > rho) offset = scaled(offset, rho / n);
  return {scaled(add(base.point, offset), c), base.approximate};
}

double SmoothedSet::distance_to(VecView y) const { return distance(y, project(y).point); }

bool SmoothedSet::contains(VecView x, double tol) const {
  require_dim(x.size(), cone().ambient_dim(), "smoothed set membership");
  if (!all_finite(x)) return false;
  const Vec z = scaled(x, rescale() * beta_);
  if (polytope_ && polytope_->max_violation(z) <= 0.0) return true;
  const SetProjection base = project_base(z);
  return distance(z, base.point) <= ball_radius() + tol * (1.0 + norm(z));
}

SetOracle SmoothedSet::oracle() const {
  SetOracle o;
  o.dim = cone().ambient_dim();
  auto self = std::make_shared<const SmoothedSet>(*this);
  o.contains = [self](VecView x) { return self->contains(x); };
  o.project = [self](VecView x) { return self->project(x).point; };
  o.interior = scaled(add(core_->center, cone().interior_point()), 1.0 / (rescale() * beta_));
  return o;
}

SetProjection project_smoothed(const SmoothedSet& s, VecView y) { return s.project(y); }

SmoothedSet scale_set(const SmoothedSet& s, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidArgument("scale_set: eta must be positive and finite");
  return SmoothedSet(s.core_ptr(), s.variant(), s.beta() / eta);
}

SetOracle cone_oracle(const ConeModel& k) {
  SetOracle o;
  o.dim = k.ambient_dim();
  o.contains = [k](VecView x) { return k.contains(x); };
  o.project = [k](VecView x) { return k.project(x); };
  o.interior = k.interior_point();
  return o;
}

HausdorffReport hausdorff_sets(const SetOracle& a, const SetOracle& b, bool excess_a, bool excess_b,
                               double radius, std::size_t samples, std::uint64_t seed) {
  if (!(radius > 0.0)) throw InvalidArgument("hausdorff: radius must be positive");
  require_dim(b.dim, a.dim, "hausdorff");
  if (!a.contains(a.interior) || !b.contains(b.interior))
    throw NumericalError("hausdorff: membership oracle rejects its own interior point");
  HausdorffReport report;
  const Vec origin = zeros(a.dim);
  if (excess_a && a.contains(origin)) {
    HausdorffRow row{{}, origin, {}, distance_to_set(b, origin)};
    report.value = std::max(report.value, row.gap);
    report.rows.push_back(std::move(row));
  }
  for (const Vec& u : sphere_points(a.dim, samples, seed)) {
    HausdorffRow row;
    row.direction = u;
    row.boundary_a = boundary_along(a, u, radius);
    row.boundary_b = boundary_along(b, u, radius);
    if (excess_a && !row.boundary_a.empty()) row.gap = std::max(row.gap, distance_to_set(b, row.boundary_a));
    if (excess_b && !row.boundary_b.empty()) row.gap = std::max(row.gap, distance_to_set(a, row.boundary_b));
    report.value = std::max(report.value, row.gap);
    report.rows.push_back(std::move(row));
  }
  return report;
}

HausdorffReport hausdorff_report(const SmoothedSet& s, double radius, std::size_t samples, std::uint64_t seed) {
  const bool need_k = !is_outer(s.variant());
  const bool need_s = !is_inner(s.variant());
  return hausdorff_sets(cone_oracle(s.cone()), s.oracle(), need_k, need_s, radius, samples, seed);
}

double hausdorff_estimate(const SmoothedSet& s, double radius, std::size_t samples, std::uint64_t seed) {
  return hausdorff_report(s, radius, samples, seed).value;
}

LiftedCone conic_lift(SetMembership c_membership, Vec x0, double radius) {
  if (!c_membership) throw InvalidArgument("conic_lift: missing membership oracle");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("conic_lift: radius must be positive");
  require_finite(x0, "conic_lift");
  if (!c_membership(x0)) throw InvalidArgument("conic_lift: x0 is not in C");
  for (const Vec& p : ball_points(x0.size(), radius, 100, 4242)) {
    if (!c_membership(add(x0, p))) throw InvalidArgument("conic_lift: B(x0, R) is not contained in C");
  }
  LiftedCone out{ConeModel::lifted({c_membership, x0, radius, 1e6}), radius, 0.0, {}};
  out.outer_bound = 1.0 - radius / std::sqrt(1.0 + radius * radius);
  out.core_point = zeros(x0.size() + 1);
  out.core_point.back() = std::sqrt(1.0 + radius * radius) / radius;
  return out;
}

ConicCore lifted_core(const LiftedCone& lift) {
  return {lift.cone, lift.core_point, norm(lift.core_point) - 1.0, false, Provenance::Certified, nullptr};
}

}  // namespace conesmooth

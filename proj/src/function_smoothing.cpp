#include "conesmooth/function_smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "conesmooth/error.hpp"
#include "conesmooth/sampling.hpp"
#include "conesmooth/simplex.hpp"

namespace conesmooth {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Numeric: return "numeric";
    case Provenance::Certified: return "certified";
  }
  return "unknown";
}

namespace {

const std::vector<std::pair<Variant, std::string>>& variant_names() {
  static const std::vector<std::pair<Variant, std::string>> names = {
      {Variant::MinInner, "min-inner"},     {Variant::MaxInner, "max-inner"},
      {Variant::MinGeneral, "min-general"}, {Variant::MaxGeneral, "max-general"},
      {Variant::MinOuter, "min-outer"},     {Variant::MaxOuter, "max-outer"},
  };
  return names;
}

PriceEnvelope dual_envelope(const std::vector<Vec>& vertices, VecView x) {
  const std::size_t m = vertices.size();
  Matrix gram(m, m);
  Vec c(m);
  for (std::size_t i = 0; i < m; ++i) {
    c[i] = dot(vertices[i], x) + 0.5 * norm_sq(vertices[i]);
    for (std::size_t j = i; j < m; ++j) {
      gram(i, j) = dot(vertices[i], vertices[j]);
      gram(j, i) = gram(i, j);
    }
  }
  const SimplexQpResult qp = solve_simplex_qp(gram, c);
  PriceEnvelope out;
  out.maximizer = zeros(x.size());
  for (std::size_t i = 0; i < m; ++i)
    if (qp.lambda[i] != 0.0) axpy(qp.lambda[i], vertices[i], out.maximizer);
  out.value = -qp.objective;
  return out;
}

bool sampled_uniqueness(const SublinearFn& f, const Vec& center, double height) {
  const double radius = 4.0 * (1.0 + f.lipschitz() + norm(center));
  auto pts = ball_points(f.dim(), radius, 1000, 20240601);
  for (const Vec& s : f.structured_points()) pts.push_back(s);
  for (Vec& p : pts) {
    p = add(p, center);
    const double lhs = f.price(p);
    const double rhs = height + f.eval(sub(p, center));
    if (std::abs(lhs - rhs) > 1e-8 * (1.0 + std::abs(lhs))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(Variant v) {
  for (const auto& [k, n] : variant_names())
    if (k == v) return n;
  return "unknown";
}

Variant variant_from_string(const std::string& name) {
  for (const auto& [k, n] : variant_names())
    if (n == name) return k;
  throw InvalidArgument("unknown variant '" + name + "'");
}

bool is_maximal(Variant v) {
  return v == Variant::MaxInner || v == Variant::MaxGeneral || v == Variant::MaxOuter;
}
bool is_inner(Variant v) { return v == Variant::MinInner || v == Variant::MaxInner; }
bool is_outer(Variant v) { return v == Variant::MinOuter || v == Variant::MaxOuter; }

FunctionalCore compute_core(const SublinearFn& f) {
  FunctionalCore core{f, zeros(f.dim()), 0.0, 0.0, true, Provenance::ClosedForm};
  switch (f.family()) {
    case Family::ReLU:
      core.center = {-0.5};
      core.center_height = 0.0;
      core.width = 0.125;
      return core;
    case Family::EuclideanNorm:
    case Family::OneNorm:
    case Family::WeightedInfNorm: {
      core.center_height = f.price(core.center);
      core.width = core.center_height;
      if (f.family() == Family::WeightedInfNorm) {
        const Vec& w = f.weights();
        core.unique = std::all_of(w.begin(), w.end(), [&](double v) { return v == w.front(); });
      }
      return core;
    }
    case Family::Max: {
      const double d = static_cast<double>(f.dim());
      core.center = scaled(ones(f.dim()), -1.0 / d);
      core.center_height = 0.5 - 1.0 / d;
      core.width = 0.5 * (1.0 - 1.0 / d);
      return core;
    }
    case Family::MaxEigen: {
      const double d = static_cast<double>(f.order());
      core.center = scaled(svec_identity(f.order()), -1.0 / d);
      core.center_height = 0.5 - 1.0 / d;
      core.width = 0.5 * (1.0 - 1.0 / d);
      return core;
    }
    case Family::PolytopeSupport: {
      const PriceEnvelope env = dual_envelope(*f.support_vertices(), zeros(f.dim()));
      core.provenance = Provenance::Numeric;
      core.center = scaled(env.maximizer, -1.0);
      core.center_height = f.price(core.center);
      core.width = core.center_height + 0.5 * norm_sq(core.center);
      if (std::abs(core.width - env.value) > 1e-8 * (1.0 + std::abs(env.value))) {
        throw NumericalError("compute_core: primal and dual core widths disagree");
      }
      core.unique = sampled_uniqueness(f, core.center, core.center_height);
      return core;
    }
  }
  return core;
}

double price(const FunctionalCore& core, VecView x) { return core.base.price(x); }

double moreau_sublinear(const SublinearFn& f, VecView x) { return f.moreau(x); }

PriceEnvelope moreau_of_price(const FunctionalCore& core, VecView x) {
  const SublinearFn& f = core.base;
  require_dim(x.size(), f.dim(), "moreau_of_price");
  require_finite(x, "moreau_of_price");
  if (core.unique) {
    const Vec shifted = sub(x, core.center);
    return {core.center_height + f.moreau(shifted), f.project_support(shifted)};
  }
  const auto vertices = f.support_vertices();
  if (!vertices) throw UnsupportedError("moreau_of_price: no vertex description for " + f.name());
  return dual_envelope(*vertices, x);
}

SmoothingSpec::SmoothingSpec(std::shared_ptr<const FunctionalCore> core, Variant variant, double beta)
    : core_(std::move(core)), variant_(variant), beta_(beta) {
  if (!core_) throw InvalidArgument("SmoothingSpec: missing core");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("SmoothingSpec: beta must be positive and finite");
  lambda_ = (variant == Variant::MinGeneral || variant == Variant::MaxGeneral) ? 0.5 * core_->width : core_->width;
}

SmoothingSpec::SmoothingSpec(const SublinearFn& f, Variant variant, double beta)
    : SmoothingSpec(std::make_shared<const FunctionalCore>(compute_core(f)), variant, beta) {}

double SmoothingSpec::offset() const {
  if (is_inner(variant_)) return 0.0;
  if (is_outer(variant_)) return core_->width;
  return 0.5 * core_->width;
}

double SmoothingSpec::value(VecView x) const {
  const SublinearFn& f = core_->base;
  require_dim(x.size(), f.dim(), "eval_smoothing");
  require_finite(x, "eval_smoothing");
  const Vec u = scaled(x, beta_);
  double inner;
  if (is_maximal(variant_) && !core_->unique) {
    inner = moreau_of_price(*core_, u).value;
  } else {
    inner = core_->center_height + f.moreau(sub(u, core_->center));
  }
  return (inner - offset()) / beta_;
}

Vec SmoothingSpec::gradient(VecView x) const {
  const SublinearFn& f = core_->base;
  require_dim(x.size(), f.dim(), "grad_smoothing");
  require_finite(x, "grad_smoothing");
  const Vec u = scaled(x, beta_);
  if (is_maximal(variant_) && !core_->unique) return moreau_of_price(*core_, u).maximizer;
  return f.project_support(sub(u, core_->center));
}

SmoothingSpec scale_function(const SmoothingSpec& s, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidArgument("scale_function: eta must be positive and finite");
  return SmoothingSpec(s.core_ptr(), s.variant(), s.beta() / eta);
}

double estimate_distance(const SmoothingSpec& s, double radius, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("estimate_distance: samples must be at least 1");
  const SublinearFn& f = s.base();
  const FunctionalCore& core = s.core();
  if (radius <= 0.0) radius = 4.0 * (1.0 + f.lipschitz() + norm(core.center)) / s.beta();

  std::vector<Vec> pts;
  pts.push_back(zeros(f.dim()));
  if (samples > 1) {
    pts.push_back(scaled(core.center, 1.0 / s.beta()));
    for (const Vec& v : f.structured_points()) {
      const double n = norm(v);
      if (n == 0.0) continue;
      pts.push_back(scaled(v, 1.0 / s.beta()));
      pts.push_back(scaled(v, radius / n));
    }
    const auto cloud = ball_points(f.dim(), radius, samples - 1, seed);
    pts.insert(pts.end(), cloud.begin(), cloud.end());
  }
  double worst = 0.0;
  for (const Vec& p : pts) worst = std::max(worst, std::abs(s.value(p) - f.eval(p)));
  return worst;
}

double max_smoothing_closed_form(VecView x) {
  const std::size_t d = x.size();
  if (d == 0) throw DimensionError("max_smoothing_closed_form: empty input");
  Vec sorted(x.begin(), x.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
  std::size_t count = 0;
  double alpha = 0.0;
  double partial = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    partial += sorted[j];
    const double a = (partial - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - a > 0.0) {
      count = j + 1;
      alpha = a;
    }
  }
  double quad = 0.0;
  for (std::size_t i = 0; i < count; ++i) quad += (sorted[i] - alpha) * (sorted[i] - alpha);
  return alpha + 0.5 * quad + 0.25 * (1.0 + 1.0 / static_cast<double>(d));
}

}  // namespace conesmooth

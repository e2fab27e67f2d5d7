#include "conesmooth/numeric_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "conesmooth/error.hpp"
#include "conesmooth/sampling.hpp"

namespace conesmooth {

namespace {

constexpr double kDedupResolution = 1e-4;
constexpr double kUniquenessTolerance = 1e-4;

// Keeps a normal unless an earlier kept one lies within the resolution, so
// the survivors of a prefix of the sample stay survivors of the whole sample.
std::vector<Vec> dedup(std::vector<Vec> normals) {
  std::multimap<double, std::size_t> kept_by_first;
  std::vector<Vec> out;
  for (Vec& z : normals) {
    bool duplicate = false;
    const auto lo = kept_by_first.lower_bound(z[0] - kDedupResolution);
    const auto hi = kept_by_first.upper_bound(z[0] + kDedupResolution);
    for (auto it = lo; it != hi; ++it) {
      if (distance(out[it->second], z) <= kDedupResolution) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    kept_by_first.emplace(z[0], out.size());
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

Halfspaces CoreEstimate::halfspaces() const {
  Halfspaces h;
  h.normals = normals;
  h.offsets.assign(normals.size(), -1.0);
  return h;
}

std::vector<Vec> sample_normal_fan(const ConeModel& k, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_normal_fan: n must be at least 1");
  const std::vector<Vec> raw = k.normal_sampler(seed, n);
  const std::vector<Vec> members = k.member_sampler(seed + 1, 500);
  std::vector<Vec> accepted;
  accepted.reserve(raw.size());
  for (const Vec& z : raw) {
    if (std::abs(norm(z) - 1.0) > 1e-10) continue;
    bool ok = true;
    for (const Vec& m : members) {
      if (dot(z, m) > 1e-8) {
        ok = false;
        break;
      }
    }
    if (ok) accepted.push_back(z);
  }
  if (accepted.empty()) throw NumericalError("sample_normal_fan: no sampled normal passed validation");
  return dedup(std::move(accepted));
}

CoreEstimate estimate_core(const ConeModel& k, std::size_t n, std::uint64_t seed) {
  CoreEstimate e{k, sample_normal_fan(k, n, seed), {}, 0.0, n, seed, 0.0, 0};
  PolyhedronProjectionOptions opt;
  opt.tolerance = 1e-10;
  const PolyhedronProjection p = project_polyhedron(e.halfspaces(), zeros(k.ambient_dim()), opt);
  e.center_estimate = p.point;
  e.width_estimate = norm(p.point) - 1.0;
  e.max_violation = e.halfspaces().max_violation(p.point);
  e.rounds = p.iterations;
  return e;
}

bool uniqueness_probe(const CoreEstimate& e, std::size_t samples) {
  const ConeModel& k = e.cone;
  const Halfspaces h = e.halfspaces();
  const Vec& xk = e.center_estimate;

  const auto members = k.member_sampler(e.seed + 101, samples);
  for (const Vec& m : members) {
    for (double t : {0.25, 1.0, 4.0}) {
      Vec p = xk;
      axpy(t, m, p);
      if (h.max_violation(p) > kUniquenessTolerance) return false;
    }
  }

  Vec inner = k.interior_point();
  const double ni = norm(inner);
  Vec origin = xk;
  axpy(0.5 / ni, inner, origin);
  const auto dirs = sphere_points(k.ambient_dim(), samples, e.seed + 202);
  for (const Vec& d : dirs) {
    double t = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < h.size(); ++j) {
      const double ad = dot(h.normals[j], d);
      if (ad <= 1e-12) continue;
      t = std::min(t, (h.offsets[j] - dot(h.normals[j], origin)) / ad);
    }
    if (!std::isfinite(t) || t > 10.0) continue;
    Vec b = origin;
    axpy(t, d, b);
    if (k.distance_to(sub(b, xk)) > kUniquenessTolerance) return false;
  }
  return true;
}

}  // namespace conesmooth

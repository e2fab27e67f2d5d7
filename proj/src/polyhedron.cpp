#include "conesmooth/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "conesmooth/error.hpp"

namespace conesmooth {

double Halfspaces::max_violation(VecView x) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < normals.size(); ++j) worst = std::max(worst, dot(normals[j], x) - offsets[j]);
  return worst;
}

namespace {

// r = (A^T A)^+ A^T v and z = v - A r for the active normals A.
void split(const Halfspaces& h, const std::vector<std::size_t>& active, VecView v, Vec& r, Vec& z) {
  const std::size_t k = active.size();
  z.assign(v.begin(), v.end());
  r.assign(k, 0.0);
  if (k == 0) return;
  Matrix gram(k, k);
  Vec rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    const Vec& na = h.normals[active[a]];
    rhs[a] = dot(na, v);
    for (std::size_t b = a; b < k; ++b) {
      gram(a, b) = dot(na, h.normals[active[b]]);
      gram(b, a) = gram(a, b);
    }
  }
  r = symmetric_pinv_solve(gram, rhs, 1e-13);
  for (std::size_t a = 0; a < k; ++a) axpy(-r[a], h.normals[active[a]], z);
}

}  // namespace

PolyhedronProjection project_polyhedron(const Halfspaces& h, VecView y,
                                        const PolyhedronProjectionOptions& options) {
  if (h.offsets.size() != h.normals.size()) throw DimensionError("project_polyhedron: offsets/normals size mismatch");
  Vec scale(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    require_dim(h.normals[j].size(), y.size(), "project_polyhedron");
    scale[j] = norm(h.normals[j]);
    if (scale[j] == 0.0) throw InvalidArgument("project_polyhedron: zero constraint normal");
  }

  // Constraints a_j^T x <= b_j. Adding constraint p moves x along -z where
  // z is the part of a_p orthogonal to the active normals.
  PolyhedronProjection out;
  Vec x(y.begin(), y.end());
  std::vector<std::size_t> active;
  Vec u;  // multipliers of the active constraints
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    std::size_t p = h.size();
    double worst = options.tolerance;
    for (std::size_t j = 0; j < h.size(); ++j) {
      const double v = (dot(h.normals[j], x) - h.offsets[j]) / scale[j];
      if (v > worst) {
        worst = v;
        p = j;
      }
    }
    if (p == h.size()) break;

    double up = 0.0;
    for (;;) {
      Vec r, z;
      split(h, active, h.normals[p], r, z);
      const double zz = norm_sq(z);
      const double slack = dot(h.normals[p], x) - h.offsets[p];
      double t_full = std::numeric_limits<double>::infinity();
      if (zz > 1e-24 * scale[p] * scale[p]) t_full = slack / zz;
      double t_partial = std::numeric_limits<double>::infinity();
      std::size_t drop = active.size();
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (r[a] > 1e-14) {
          const double t = u[a] / r[a];
          if (t < t_partial) {
            t_partial = t;
            drop = a;
          }
        }
      }
      const double t = std::min(t_full, t_partial);
      if (!std::isfinite(t)) throw NumericalError("project_polyhedron: constraints are infeasible");
      if (std::isfinite(t_full)) axpy(-t, z, x);
      for (std::size_t a = 0; a < active.size(); ++a) u[a] -= t * r[a];
      up += t;
      if (t_full <= t_partial) {
        active.push_back(p);
        u.push_back(up);
        break;
      }
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
      u.erase(u.begin() + static_cast<std::ptrdiff_t>(drop));
    }
  }
  if (it == options.max_iterations)
    throw NumericalError("project_polyhedron: no convergence after " + std::to_string(it) + " iterations");

  out.point = std::move(x);
  out.multipliers.assign(h.size(), 0.0);
  for (std::size_t a = 0; a < active.size(); ++a) out.multipliers[active[a]] = std::max(u[a], 0.0);
  out.active_set = std::move(active);
  out.max_violation = h.size() ? h.max_violation(out.point) : 0.0;
  out.iterations = it;
  return out;
}

}  // namespace conesmooth

#pragma once

#include <vector>

#include "conesmooth/linalg.hpp"

namespace conesmooth {

/// {x : <a_j, x> <= b_j for all j}
struct Halfspaces {
  std::vector<Vec> normals;
  Vec offsets;

  std::size_t size() const { return normals.size(); }
  double max_violation(VecView x) const;
};

struct PolyhedronProjectionOptions {
  double tolerance = 1e-10;  // allowed violation, relative to |a_j|
  int max_iterations = 100000;
};

struct PolyhedronProjection {
  Vec point;
  Vec multipliers;  // one per constraint
  std::vector<std::size_t> active_set;
  double max_violation = 0.0;
  int iterations = 0;
};

/// Euclidean projection of y onto a polyhedron by the Goldfarb-Idnani dual
/// active-set method. Throws NumericalError when the constraints are
/// infeasible or the iteration limit is hit.
PolyhedronProjection project_polyhedron(const Halfspaces& h, VecView y,
                                        const PolyhedronProjectionOptions& options = {});

}  // namespace conesmooth

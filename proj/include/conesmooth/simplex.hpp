#pragma once

#include "conesmooth/linalg.hpp"

namespace conesmooth {

struct SimplexProjection {
  Vec point;
  double threshold = 0.0;   // point_i = max(x_i - threshold, 0)
  std::size_t active = 0;   // number of positive entries
};

/// Euclidean projection onto the unit simplex by the sort/threshold rule.
/// Sorting is stable, ties resolved by index.
SimplexProjection project_simplex(VecView x);

struct SimplexQpOptions {
  double tolerance = 1e-10;  // on the gradient mapping
  int max_iterations = 200000;
};

struct SimplexQpResult {
  Vec lambda;
  double objective = 0.0;
  double gradient_mapping = 0.0;
  int iterations = 0;
};

/// Minimises 0.5 l^T G l - c^T l over the unit simplex for symmetric PSD G.
/// Accelerated projected gradient with adaptive restart, finished by an exact
/// solve on the detected support when its KKT conditions check out.
/// Throws NumericalError when neither reaches tolerance.
SimplexQpResult solve_simplex_qp(const Matrix& gram, VecView c, const SimplexQpOptions& options = {});

}  // namespace conesmooth

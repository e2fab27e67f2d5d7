#pragma once

#include <cstdint>
#include <vector>

#include "conesmooth/cone.hpp"
#include "conesmooth/linalg.hpp"
#include "conesmooth/polyhedron.hpp"

namespace conesmooth {

struct CoreEstimate {
  ConeModel cone;
  std::vector<Vec> normals;
  Vec center_estimate;
  double width_estimate = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  double max_violation = 0.0;  // of <zeta, center> <= -1 over stored normals
  int rounds = 0;

  /// The sampled outer approximation {x : <zeta_j, x> <= -1} of the core.
  Halfspaces halfspaces() const;
};

/// Unit normals of the cone at the origin, each checked against 500 sampled
/// members of the cone, then deduplicated at angular resolution 1e-4.
/// Throws NumericalError if no normal survives.
std::vector<Vec> sample_normal_fan(const ConeModel& k, std::size_t n, std::uint64_t seed);

/// Min-norm point of the sampled core. Throws NumericalError on failure.
CoreEstimate estimate_core(const ConeModel& k, std::size_t n, std::uint64_t seed);

/// False when the sampled core visibly differs from x_K + K.
bool uniqueness_probe(const CoreEstimate& e, std::size_t samples);

}  // namespace conesmooth

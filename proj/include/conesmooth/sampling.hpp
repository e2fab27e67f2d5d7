#pragma once

#include <cstdint>
#include <vector>

#include "conesmooth/linalg.hpp"

namespace conesmooth {

/// Randomised Halton sequence: radical inverses in the first `dim` primes,
/// shifted modulo 1 by a seed-dependent Cranley-Patterson rotation.
/// Point k of a given (dim, seed) never changes, so a longer run always
/// extends a shorter one.
class Halton {
 public:
  Halton(std::size_t dim, std::uint64_t seed);

  std::size_t dim() const { return dim_; }
  Vec point(std::uint64_t index) const;  // entries in the open interval (0, 1)

 private:
  std::size_t dim_;
  std::vector<std::uint32_t> primes_;
  Vec shift_;
};

/// Deterministic points on the unit sphere of R^dim.
std::vector<Vec> sphere_points(std::size_t dim, std::size_t n, std::uint64_t seed);

/// Deterministic points filling the ball B(0, radius) of R^dim.
std::vector<Vec> ball_points(std::size_t dim, double radius, std::size_t n, std::uint64_t seed);

/// Pairs (x, y) with x in B(0, radius) and ||x - y|| spread log-uniformly
/// over [1e-3, 1] * radius. Used for sampled Lipschitz estimates.
std::vector<std::pair<Vec, Vec>> nearby_pairs(std::size_t dim, double radius, std::size_t n,
                                              std::uint64_t seed);

}  // namespace conesmooth

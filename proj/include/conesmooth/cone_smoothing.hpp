#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "conesmooth/cone.hpp"
#include "conesmooth/function_smoothing.hpp"
#include "conesmooth/numeric_core.hpp"

namespace conesmooth {

/// x_K, w_K = |x_K| - 1 and whether the core is exactly x_K + K.
struct ConicCore {
  ConeModel cone;
  Vec center;
  double width = 0.0;
  bool unique = false;
  Provenance provenance = Provenance::ClosedForm;
  std::shared_ptr<const CoreEstimate> estimate;  // set for numeric cores
};

/// Closed forms for orthant, second-order and PSD cones. The exponential
/// cone is estimated once (20000 normals, seed 7) and cached.
ConicCore cone_core(const ConeModel& k);

/// Whether x + B(0, 1) fits inside the cone. Exact for closed-form cores,
/// sampled normals for numeric cores, ball_samples sphere points otherwise.
bool core_membership(const ConicCore& c, VecView x, std::size_t ball_samples = 500);

struct SetProjection {
  Vec point;
  bool approximate = false;
};

/// Closed convex set given by oracles.
struct SetOracle {
  std::size_t dim = 0;
  std::function<bool(VecView)> contains;
  std::function<Vec(VecView)> project;
  Vec interior;
};

/// One of the six extremal beta-smoothings of a cone:
///   inner:   base + B(0, 1)
///   general: (base + B(0, 1 + w/2)) / (1 + w/2)
///   outer:   (base + B(0, 1 + w)) / (1 + w)
/// with base x_K + K for minimal and the core for maximal variants, then
/// shrunk by 1/beta.
class SmoothedSet {
 public:
  SmoothedSet(std::shared_ptr<const ConicCore> core, Variant variant, double beta);
  SmoothedSet(const ConeModel& k, Variant variant, double beta);

  const ConicCore& core() const { return *core_; }
  std::shared_ptr<const ConicCore> core_ptr() const { return core_; }
  const ConeModel& cone() const { return core_->cone; }
  Variant variant() const { return variant_; }
  double beta() const { return beta_; }
  double lambda() const;
  double distance_bound() const { return lambda() / beta_; }
  double ball_radius() const;  // radius added to the base before rescaling
  double rescale() const;      // the set is (base + B(0, ball_radius())) / (rescale() * beta)

  bool contains(VecView x, double tol = 1e-9) const;
  SetProjection project(VecView y) const;
  double distance_to(VecView y) const;
  SetOracle oracle() const;

 private:
  SetProjection project_base(VecView z) const;

  std::shared_ptr<const ConicCore> core_;
  Variant variant_;
  double beta_;
  std::shared_ptr<const Halfspaces> polytope_;  // sampled core, for maximal variants of numeric cores
};

SetProjection project_smoothed(const SmoothedSet& s, VecView y);

/// The set eta * S: beta becomes beta / eta.
SmoothedSet scale_set(const SmoothedSet& s, double eta);

SetOracle cone_oracle(const ConeModel& k);

struct HausdorffRow {
  Vec direction;
  Vec boundary_a;  // boundary point of the first set along the ray (empty if none)
  Vec boundary_b;
  double gap = 0.0;
};

struct HausdorffReport {
  double value = 0.0;
  std::vector<HausdorffRow> rows;
};

/// Sampled lower bound on the Hausdorff distance between two closed convex
/// sets. Boundary points come from 80-step bisection along rays from each
/// set's interior point, bracketed in [0, 2 radius]; the origin is always
/// probed as a point of a. excess_a / excess_b select the one-sided terms
/// sup_{x in a} d(x, b) and sup_{x in b} d(x, a).
HausdorffReport hausdorff_sets(const SetOracle& a, const SetOracle& b, bool excess_a, bool excess_b,
                               double radius, std::size_t samples, std::uint64_t seed);

/// Hausdorff estimate between the smoothed set and its cone. Inner variants
/// only need d(K | S), outer only d(S | K).
HausdorffReport hausdorff_report(const SmoothedSet& s, double radius, std::size_t samples, std::uint64_t seed);
double hausdorff_estimate(const SmoothedSet& s, double radius, std::size_t samples, std::uint64_t seed);

struct LiftedCone {
  ConeModel cone;
  double radius = 0.0;
  double outer_bound = 0.0;  // 1 - R / sqrt(1 + R^2)
  Vec core_point;            // (0, sqrt(1 + R^2) / R)
};

/// Lift of a closed convex set C containing B(x0, R). Throws InvalidArgument
/// if a sampled point of that ball is reported outside C.
LiftedCone conic_lift(SetMembership c_membership, Vec x0, double radius);

/// Core with the certified point of the lift as its center.
ConicCore lifted_core(const LiftedCone& lift);

}  // namespace conesmooth

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "conesmooth/linalg.hpp"

namespace conesmooth {

enum class ConeKind { Orthant, SecondOrder, PSD, Exponential, Lifted };
std::string to_string(ConeKind k);
ConeKind cone_kind_from_string(const std::string& name);  // throws InvalidArgument

using SetMembership = std::function<bool(VecView)>;

/// Closed convex cone with nonempty interior.
///   Orthant(d):     R^d_+
///   SecondOrder(d): {(x, t) in R^d x R : |x| <= t}, ambient d + 1
///   PSD(d):         symmetric d x d PSD matrices in svec coordinates
///   Exponential:    cl{(x, y, z) : y > 0, y exp(x / y) <= z}
///   Lifted:         cl{(x, r) : r > 0, x / r in C - x0} for a convex set C
class ConeModel {
 public:
  static ConeModel orthant(std::size_t d);
  static ConeModel second_order(std::size_t d);
  static ConeModel psd(std::size_t order);
  static ConeModel exponential();

  struct LiftData {
    SetMembership base;
    Vec x0;
    double radius = 0.0;
    double recession_limit = 1e6;
  };
  static ConeModel lifted(LiftData data);

  ConeKind kind() const { return kind_; }
  std::size_t param() const { return param_; }  // d for the catalog cones
  std::size_t ambient_dim() const { return ambient_; }
  std::string name() const;
  double tolerance() const;  // default membership tolerance

  bool contains(VecView x) const { return contains(x, tolerance()); }
  bool contains(VecView x, double tol) const;

  bool has_projection() const { return kind_ != ConeKind::Lifted; }
  Vec project(VecView x) const;  // throws UnsupportedError for lifted cones
  double distance_to(VecView x) const;

  /// n unit vectors of the normal cone at the origin (the polar cone).
  /// Exponential: negated dual-cone boundary parametrisation plus its two
  /// limit rays. Other cones: normalised residuals x - P(x) of sphere points.
  std::vector<Vec> normal_sampler(std::uint64_t seed, std::size_t n) const;

  /// n points of the cone, unit norm, for validity checks.
  std::vector<Vec> member_sampler(std::uint64_t seed, std::size_t n) const;

  /// A point in the interior of the cone.
  Vec interior_point() const;

  const LiftData* lift() const { return lift_.get(); }

 private:
  ConeModel(ConeKind k, std::size_t param, std::size_t ambient) : kind_(k), param_(param), ambient_(ambient) {}

  ConeKind kind_;
  std::size_t param_;
  std::size_t ambient_;
  std::shared_ptr<const LiftData> lift_;
};

Vec project_second_order(VecView x);
Vec project_psd(VecView x);
Vec project_exponential(VecView v);
bool in_exponential(VecView v, double tol);

}  // namespace conesmooth

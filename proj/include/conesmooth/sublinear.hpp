#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conesmooth/linalg.hpp"

namespace conesmooth {

enum class Family { ReLU, EuclideanNorm, OneNorm, WeightedInfNorm, Max, MaxEigen, PolytopeSupport };

enum class SupportKind { Interval, Simplex, UnitBall, SignedBox, WeightedCrossPolytope, SpectralSimplex, Polytope };

std::string to_string(Family f);
Family family_from_string(const std::string& name);  // throws InvalidArgument
std::string to_string(SupportKind k);

/// A sublinear function sigma, described through its subdifferential at the
/// origin. MaxEigen acts on symmetric matrices stored with svec(), so its
/// ambient dimension is order*(order+1)/2.
class SublinearFn {
 public:
  static SublinearFn relu();
  static SublinearFn euclidean_norm(std::size_t dim);
  static SublinearFn one_norm(std::size_t dim);
  static SublinearFn weighted_inf_norm(Vec weights);
  static SublinearFn max(std::size_t dim);
  static SublinearFn max_eigen(std::size_t order);
  static SublinearFn polytope_support(std::vector<Vec> vertices);

  Family family() const { return family_; }
  SupportKind support_kind() const;
  std::size_t dim() const { return dim_; }
  std::size_t order() const { return order_; }  // matrix order for MaxEigen, else dim
  const Vec& weights() const { return weights_; }
  double lipschitz() const { return lipschitz_; }
  std::string name() const { return to_string(family_); }

  double eval(VecView x) const;
  Vec project_support(VecView x) const;
  Vec subgradient_at(VecView x) const;

  /// max over zeta in the support set of <zeta, x> + |zeta|^2 / 2
  double price(VecView x) const;

  /// 0.5|x|^2 - 0.5 dist(x, support)^2, the Moreau envelope of sigma at x.
  double moreau(VecView x) const;

  /// Vertices of the support set when it is a polytope with a manageable
  /// vertex list (the one-norm box only up to dimension 12).
  std::optional<std::vector<Vec>> support_vertices() const;

  /// Structured probe points: the origin and the support set's extreme points.
  std::vector<Vec> structured_points() const;

 private:
  SublinearFn(Family f, std::size_t dim) : family_(f), dim_(dim), order_(dim) {}
  void check(VecView x, const char* what) const;

  Family family_;
  std::size_t dim_;
  std::size_t order_;
  Vec weights_;
  std::vector<Vec> vertices_;
  double lipschitz_ = 1.0;
};

}  // namespace conesmooth

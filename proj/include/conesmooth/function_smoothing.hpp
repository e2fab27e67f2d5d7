#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "conesmooth/linalg.hpp"
#include "conesmooth/sublinear.hpp"

namespace conesmooth {

enum class Provenance { ClosedForm, Numeric, Certified };
std::string to_string(Provenance p);

/// Center x_sigma, height r_sigma and width w_sigma = r_sigma + |x_sigma|^2/2
/// of the functional core of sigma (the epigraph of its price function).
struct FunctionalCore {
  SublinearFn base;
  Vec center;
  double center_height = 0.0;
  double width = 0.0;
  bool unique = false;
  Provenance provenance = Provenance::ClosedForm;
};

/// Closed forms where known; otherwise minimises price + |.|^2/2 via its dual
/// over the support polytope. Throws NumericalError if that solve fails.
FunctionalCore compute_core(const SublinearFn& f);

double price(const FunctionalCore& core, VecView x);

/// Moreau envelope of sigma: 0.5|x|^2 - 0.5 dist(x, support)^2.
double moreau_sublinear(const SublinearFn& f, VecView x);

struct PriceEnvelope {
  double value = 0.0;
  Vec maximizer;  // the support point zeta achieving the dual optimum, also the gradient
};

/// (price infimal-convolved with |.|^2/2)(x), from the concave dual over the
/// support polytope. Throws UnsupportedError for non-polytopal support sets
/// without a closed form.
PriceEnvelope moreau_of_price(const FunctionalCore& core, VecView x);

enum class Variant { MinInner, MaxInner, MinGeneral, MaxGeneral, MinOuter, MaxOuter };
std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);  // throws InvalidArgument
bool is_maximal(Variant v);
bool is_inner(Variant v);
bool is_outer(Variant v);

/// One of the six extremal beta-smoothings of sigma.
class SmoothingSpec {
 public:
  SmoothingSpec(std::shared_ptr<const FunctionalCore> core, Variant variant, double beta);
  SmoothingSpec(const SublinearFn& f, Variant variant, double beta);

  const FunctionalCore& core() const { return *core_; }
  std::shared_ptr<const FunctionalCore> core_ptr() const { return core_; }
  const SublinearFn& base() const { return core_->base; }
  Variant variant() const { return variant_; }
  double beta() const { return beta_; }
  double lambda() const { return lambda_; }
  double delta() const { return 0.0; }
  double distance_bound() const { return lambda_ / beta_; }

  /// Offset subtracted from the inner smoothing at beta = 1: 0, w/2 or w.
  double offset() const;

  double value(VecView x) const;
  Vec gradient(VecView x) const;

 private:
  std::shared_ptr<const FunctionalCore> core_;
  Variant variant_;
  double beta_;
  double lambda_;
};

/// The smoothing of x -> eta f(x / eta): beta becomes beta / eta.
SmoothingSpec scale_function(const SmoothingSpec& s, double eta);

/// Lower bound on sup |s(x) - sigma(x)| from low-discrepancy points of
/// B(0, radius) plus structured points. radius <= 0 selects the default
/// 4 (1 + M + |x_sigma|) / beta.
double estimate_distance(const SmoothingSpec& s, double radius, std::size_t samples, std::uint64_t seed);

/// Direct evaluation of the minimal general smoothing of max at beta = 1
/// by its sorted-threshold closed form.
double max_smoothing_closed_form(VecView x);

}  // namespace conesmooth

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conesmooth/function_smoothing.hpp"
#include "conesmooth/linalg.hpp"
#include "conesmooth/sublinear.hpp"

namespace conesmooth {

/// G : R^d -> R^n with Jacobian, M-Lipschitz with L-Lipschitz Jacobian.
struct SmoothMap {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  std::function<Vec(VecView)> eval;
  std::function<Matrix(VecView)> jacobian;  // out_dim x in_dim
  double M = 0.0;
  double L = 0.0;

  static SmoothMap affine(Matrix a, Vec b);
  static SmoothMap identity(std::size_t d);
};

enum class Surrogate { OptimalGeneral, OptimalInner, OptimalOuter, LogSumExp };
std::string to_string(Surrogate s);
Surrogate surrogate_from_string(const std::string& name);  // throws InvalidArgument

/// x -> f(G(x)) where f is the inner_beta-smoothing of sigma selected by the
/// surrogate, inner_beta = (beta_target - M_sigma L) / M^2. For LogSumExp,
/// f(z) = eta log sum exp(z / eta) with eta = 1 / inner_beta (sigma must be max).
class CompositeSmoothing {
 public:
  CompositeSmoothing(SublinearFn sigma, SmoothMap map, double beta_target, Surrogate surrogate);

  const SublinearFn& sigma() const { return sigma_; }
  const SmoothMap& map() const { return map_; }
  double beta_target() const { return beta_target_; }
  double inner_beta() const { return inner_beta_; }
  double eta() const { return 1.0 / inner_beta_; }
  Surrogate surrogate() const { return surrogate_; }

  /// sup |f - sigma| of the outer surrogate, before composition.
  double surrogate_distance() const;

  double value(VecView x) const;
  std::pair<double, Vec> value_grad(VecView x) const;
  double objective(VecView x) const;  // sigma(G(x))

 private:
  SublinearFn sigma_;
  SmoothMap map_;
  double beta_target_;
  double inner_beta_;
  Surrogate surrogate_;
  std::optional<SmoothingSpec> spec_;
};

std::pair<double, Vec> composite_value_grad(const CompositeSmoothing& c, VecView x);

/// eta log sum exp(z / eta), shifted by max(z).
double log_sum_exp(VecView z, double eta);
Vec log_sum_exp_grad(VecView z, double eta);

struct Certificate {
  double lambda = 0.0;
  double delta = 0.0;
};

/// (M^2 w/2, M_sigma L) for the general surrogate, (M^2 w, M_sigma L) for
/// inner/outer, (M^2 log n, L) for LogSumExp.
Certificate smoothability_certificate(const CompositeSmoothing& c);

struct BenchRecord {
  std::string instance;
  Surrogate surrogate = Surrogate::OptimalInner;
  std::size_t n = 0;
  std::size_t d = 0;
  double epsilon = 0.0;
  double eta = 0.0;
  double beta = 0.0;
  int iterations = 0;
  double final_gap = 0.0;
  double wall_time_ms = 0.0;
  bool gap_known = false;
};

/// Nesterov's constant-step accelerated gradient with step 1/beta_target.
/// Stops when sigma(G(x)) - f_star <= eps if f_star is given, otherwise when
/// the gradient norm drops below eps * beta_target / 10.
/// Throws NumericalError on iteration limit or a violated gradient inequality.
BenchRecord accelerated_minimize(const CompositeSmoothing& c, VecView x0, double eps, int max_iter,
                                 std::optional<double> f_star = std::nullopt);

/// max_i <a_i, x> + b_i with a planted minimiser: d + 1 rows are active at
/// x_star with 0 in the convex hull of their gradients.
struct MinimaxInstance {
  Matrix a;
  Vec b;
  Vec x_star;
  double f_star = 0.0;
  std::uint64_t seed = 0;

  std::size_t n() const { return a.rows(); }
  std::size_t d() const { return a.cols(); }
  std::string descriptor() const;
};

MinimaxInstance planted_minimax(std::size_t n, std::size_t d, std::uint64_t seed);

/// Composite for eps accuracy: LogSumExp with eta = eps / (2 log n), or the
/// optimal inner smoothing of max with distance budget eps / 2.
CompositeSmoothing minimax_smoothing(const MinimaxInstance& inst, double eps, Surrogate surrogate);

BenchRecord bench_minimax(const MinimaxInstance& inst, double eps, Surrogate surrogate, int max_iter = 1000000);

}  // namespace conesmooth

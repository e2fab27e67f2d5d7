#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "conesmooth/cone_smoothing.hpp"
#include "conesmooth/linalg.hpp"

namespace conesmooth {

struct CheckReport {
  std::string name;
  std::size_t n_samples = 0;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

CheckReport make_report(std::string name, std::size_t n, double worst, double tol, std::uint64_t seed);

struct Field {
  std::size_t dim = 0;
  std::function<double(VecView)> value;
  std::function<Vec(VecView)> gradient;
};

/// max ||grad f(x) - grad f(y)|| / ||x - y|| over sampled pairs in B(0, radius):
/// half close pairs, half independent pairs. A lower bound on the modulus.
double lipschitz_grad_estimate(const Field& f, double radius, std::size_t pairs, std::uint64_t seed);

/// Worst of f(y) - f(x) - <grad f(x), y - x> - beta/2 |y - x|^2, divided by
/// 1 + |f(y)|.
CheckReport quadratic_upper_check(const Field& f, double beta, std::size_t samples, std::uint64_t seed,
                                  double radius = 4.0, double tolerance = 1e-9);

/// Worst of (lo(x) - hi(x)) / (1 + |hi(x)|) over sampled x.
CheckReport sandwich_check(const std::function<double(VecView)>& lo, const std::function<double(VecView)>& hi,
                           std::size_t dim, std::size_t samples, std::uint64_t seed, double radius = 4.0,
                           double tolerance = 1e-9);

/// Worst of ||grad f(x) - central difference|| / max(1, ||grad f(x)||).
CheckReport finite_difference_check(const Field& f, std::size_t samples, std::uint64_t seed, double radius = 4.0,
                                    double step = 1e-5, double tolerance = 1e-5);

/// For boundary points x = P(y) of sampled outside points y with outward
/// normal zeta, checks that B(x - zeta / beta, 1 / beta) lies in the set;
/// the violation is the largest distance from a probe of that ball to the set.
CheckReport set_smoothness_check(const SetOracle& s, double beta, std::size_t boundary_samples, std::uint64_t seed,
                                 double radius = 4.0, double tolerance = 1e-6);

/// max ||zeta - zeta'|| / ||x - x'|| over sampled nearby boundary pairs.
double normal_lipschitz_estimate(const SetOracle& s, std::size_t pairs, std::uint64_t seed, double radius = 4.0);

/// Property suites; each returns one report per check.
std::vector<CheckReport> function_suite(std::uint64_t seed, const std::vector<double>& betas = {0.5, 1.0, 4.0});
std::vector<CheckReport> cone_suite(std::uint64_t seed, const std::vector<double>& betas = {0.5, 1.0, 4.0});
std::vector<CheckReport> composite_suite(std::uint64_t seed);

/// "functions", "cones", "composite" or "all". Throws InvalidArgument otherwise.
std::vector<CheckReport> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace conesmooth

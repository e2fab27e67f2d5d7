#include <doctest.h>

#include <cmath>

#include "conesmooth/error.hpp"
#include "conesmooth/function_smoothing.hpp"
#include "conesmooth/verify.hpp"

using namespace conesmooth;

namespace {

Field half_square(std::size_t d) {
  return {d, [](VecView x) { return 0.5 * norm_sq(x); }, [](VecView x) { return Vec(x.begin(), x.end()); }};
}

SetOracle unit_ball() {
  return {2, [](VecView x) { return norm(x) <= 1.0 + 1e-12; },
          [](VecView x) {
            const double n = norm(x);
            return n <= 1.0 ? Vec(x.begin(), x.end()) : scaled(x, 1.0 / n);
          },
          {0.0, 0.0}};
}

}  // namespace

TEST_CASE("gradient lipschitz estimates") {
  CHECK(lipschitz_grad_estimate(half_square(3), 2.0, 200, 1) == doctest::Approx(1.0).epsilon(1e-12));
  const Field affine{2, [](VecView x) { return 3.0 * x[0] - x[1]; }, [](VecView) { return Vec{3.0, -1.0}; }};
  CHECK(lipschitz_grad_estimate(affine, 2.0, 200, 1) == 0.0);
  const SmoothingSpec s(SublinearFn::relu(), Variant::MinGeneral, 1.0);
  const Field relu{1, [&](VecView x) { return s.value(x); }, [&](VecView x) { return s.gradient(x); }};
  const double est = lipschitz_grad_estimate(relu, 3.0, 500, 7);
  CHECK(est >= 0.99);
  CHECK(est <= 1.0 + 1e-9);
}

TEST_CASE("quadratic upper bound check") {
  CHECK(quadratic_upper_check(half_square(2), 1.0, 300, 2).pass);
  const Field square{2, [](VecView x) { return norm_sq(x); }, [](VecView x) { return scaled(x, 2.0); }};
  const CheckReport r = quadratic_upper_check(square, 1.0, 300, 2);
  CHECK_FALSE(r.pass);
  CHECK(r.worst_violation > 0.0);
  CHECK(quadratic_upper_check(square, 2.0, 300, 2).pass);
}

TEST_CASE("sandwich check") {
  const SmoothingSpec in(SublinearFn::relu(), Variant::MinInner, 1.0);
  const SublinearFn relu = SublinearFn::relu();
  auto f_in = [&](VecView x) { return in.value(x); };
  auto sigma = [&](VecView x) { return relu.eval(x); };
  CHECK(sandwich_check(sigma, f_in, 1, 200, 3).pass);
  const CheckReport bad = sandwich_check(f_in, sigma, 1, 200, 3);
  CHECK_FALSE(bad.pass);
  CHECK(bad.worst_violation > 0.1);
}

TEST_CASE("finite differences") {
  CHECK(finite_difference_check(half_square(4), 200, 5).pass);
  const Field wrong{1, [](VecView x) { return x[0] * x[0]; }, [](VecView x) { return Vec{x[0]}; }};
  CHECK_FALSE(finite_difference_check(wrong, 50, 5).pass);
}

TEST_CASE("set smoothness") {
  const CheckReport ball = set_smoothness_check(unit_ball(), 1.0, 100, 1);
  CHECK(ball.pass);
  CHECK(ball.worst_violation == 0.0);
  CHECK_FALSE(set_smoothness_check(unit_ball(), 0.5, 100, 1).pass);
  CHECK_FALSE(set_smoothness_check(cone_oracle(ConeModel::orthant(2)), 1.0, 100, 1).pass);
  const SmoothedSet s(ConeModel::orthant(2), Variant::MinInner, 1.0);
  CHECK(set_smoothness_check(s.oracle(), 1.0, 100, 1).pass);
  CHECK(normal_lipschitz_estimate(s.oracle(), 200, 1) <= 1.0 + 1e-6);
  CHECK(normal_lipschitz_estimate(unit_ball(), 200, 1) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("reports") {
  const CheckReport r = make_report("x", 10, 0.5, 1.0, 3);
  CHECK(r.pass);
  CHECK(r.seed == 3);
  CHECK_FALSE(make_report("y", 10, 2.0, 1.0, 3).pass);
  CHECK_THROWS_AS(run_suite("everything", 1), InvalidArgument);
}

TEST_CASE("composite suite passes") {
  for (const CheckReport& r : composite_suite(7)) {
    INFO(r.name << " " << r.worst_violation);
    CHECK(r.pass);
  }
}

TEST_CASE("function suite passes") {
  const std::vector<CheckReport> reports = function_suite(7, {1.0});
  CHECK(reports.size() > 100);
  for (const CheckReport& r : reports) {
    INFO(r.name << " " << r.worst_violation);
    CHECK(r.pass);
  }
}

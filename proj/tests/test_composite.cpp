#include <doctest.h>

#include <cmath>

#include "conesmooth/composite.hpp"
#include "conesmooth/error.hpp"
#include "conesmooth/sampling.hpp"
#include "conesmooth/verify.hpp"

using namespace conesmooth;

namespace {

SmoothMap small_affine() {
  Matrix a(3, 2);
  a(0, 0) = 1.0; a(0, 1) = 2.0;
  a(1, 0) = -1.0; a(1, 1) = 0.5;
  a(2, 0) = 0.0; a(2, 1) = -3.0;
  return SmoothMap::affine(a, {0.1, -0.2, 0.3});
}

}  // namespace

TEST_CASE("surrogate names") {
  for (Surrogate s : {Surrogate::OptimalGeneral, Surrogate::OptimalInner, Surrogate::OptimalOuter, Surrogate::LogSumExp})
    CHECK(surrogate_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(surrogate_from_string("softmax"), InvalidArgument);
}

TEST_CASE("log-sum-exp is stable and its gradient is the softmax") {
  CHECK(log_sum_exp(Vec{0.0, 0.0}, 1.0) == doctest::Approx(std::log(2.0)));
  CHECK(log_sum_exp(Vec{1000.0, 1000.0}, 1.0) == doctest::Approx(1000.0 + std::log(2.0)));
  CHECK(log_sum_exp(Vec{-1000.0, 3.0}, 0.01) == doctest::Approx(3.0));
  const Vec g = log_sum_exp_grad(Vec{0.0, std::log(3.0)}, 1.0);
  CHECK(g[0] == doctest::Approx(0.25));
  CHECK(g[1] == doctest::Approx(0.75));
}

TEST_CASE("certificate for an affine map") {
  const SmoothMap g = small_affine();
  const double w = compute_core(SublinearFn::max(3)).width;
  for (Surrogate s : {Surrogate::OptimalGeneral, Surrogate::OptimalInner, Surrogate::OptimalOuter}) {
    const CompositeSmoothing c(SublinearFn::max(3), g, 4.0, s);
    const Certificate cert = smoothability_certificate(c);
    CHECK(cert.delta == 0.0);
    CHECK(cert.delta + g.M * g.M * c.inner_beta() == doctest::Approx(4.0));
    const double expected = (s == Surrogate::OptimalGeneral ? 0.5 : 1.0) * g.M * g.M * w;
    CHECK(cert.lambda == doctest::Approx(expected));
    const Field f{2, [&](VecView x) { return c.value(x); }, [&](VecView x) { return c.value_grad(x).second; }};
    CHECK(lipschitz_grad_estimate(f, 5.0, 400, 3) <= 4.0 * (1.0 + 1e-6));
    for (const Vec& x : ball_points(2, 5.0, 100, 4))
      CHECK(std::abs(c.value(x) - c.objective(x)) <= cert.lambda / 4.0 + 1e-12);
  }
  const CompositeSmoothing l(SublinearFn::max(3), g, 4.0, Surrogate::LogSumExp);
  CHECK(smoothability_certificate(l).lambda == doctest::Approx(g.M * g.M * std::log(3.0)));
  CHECK_THROWS_AS(CompositeSmoothing(SublinearFn::one_norm(3), g, 4.0, Surrogate::LogSumExp), InvalidArgument);
  CHECK_THROWS_AS(CompositeSmoothing(SublinearFn::max(2), g, 4.0, Surrogate::OptimalInner), DimensionError);
}

TEST_CASE("value and gradient agree") {
  const CompositeSmoothing c(SublinearFn::max(3), small_affine(), 2.0, Surrogate::OptimalGeneral);
  for (const Vec& x : ball_points(2, 3.0, 20, 8)) {
    const auto [v, grad] = composite_value_grad(c, x);
    CHECK(v == doctest::Approx(c.value(x)));
    for (std::size_t i = 0; i < 2; ++i) {
      const double h = 1e-6;
      Vec xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      CHECK(grad[i] == doctest::Approx((c.value(xp) - c.value(xm)) / (2.0 * h)).epsilon(1e-5));
    }
  }
}

TEST_CASE("planted minimax instance") {
  const MinimaxInstance inst = planted_minimax(20, 4, 11);
  CHECK(inst.n() == 20);
  CHECK(inst.d() == 4);
  const SublinearFn m = SublinearFn::max(20);
  auto f = [&](VecView x) { return m.eval(add(inst.a.apply(x), inst.b)); };
  CHECK(f(inst.x_star) == doctest::Approx(inst.f_star));
  for (const Vec& x : ball_points(4, 3.0, 300, 2)) CHECK(f(add(inst.x_star, x)) >= inst.f_star - 1e-12);
  const MinimaxInstance again = planted_minimax(20, 4, 11);
  CHECK(again.b == inst.b);
}

TEST_CASE("accelerated gradient reaches the target gap") {
  const MinimaxInstance inst = planted_minimax(16, 3, 5);
  for (Surrogate s : {Surrogate::OptimalInner, Surrogate::LogSumExp}) {
    const BenchRecord r = bench_minimax(inst, 1e-2, s);
    CHECK(r.gap_known);
    CHECK(r.final_gap <= 1e-2);
    CHECK(r.iterations > 0);
  }
  const CompositeSmoothing c = minimax_smoothing(inst, 1e-2, Surrogate::OptimalInner);
  CHECK(c.surrogate_distance() == doctest::Approx(5e-3));
  CHECK_THROWS_AS(accelerated_minimize(c, zeros(3), 1e-12, 3, inst.f_star), NumericalError);
}

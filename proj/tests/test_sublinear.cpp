#include <doctest.h>

#include <cmath>

#include "conesmooth/error.hpp"
#include "conesmooth/sampling.hpp"
#include "conesmooth/sublinear.hpp"
#include "oracles.hpp"

using namespace conesmooth;

namespace {

std::vector<SublinearFn> catalog() {
  return {SublinearFn::relu(),         SublinearFn::euclidean_norm(3), SublinearFn::one_norm(3),
          SublinearFn::weighted_inf_norm({1.0, 2.0}), SublinearFn::max(4), SublinearFn::max_eigen(3),
          SublinearFn::polytope_support({{1.0, 0.0}, {0.0, 1.0}, {-1.0, -2.0}})};
}

}  // namespace

TEST_CASE("family names round trip") {
  for (const SublinearFn& f : catalog()) CHECK(family_from_string(f.name()) == f.family());
  CHECK_THROWS_AS(family_from_string("three-norm"), InvalidArgument);
}

TEST_CASE("evaluation") {
  CHECK(SublinearFn::relu().eval(Vec{-2.0}) == 0.0);
  CHECK(SublinearFn::relu().eval(Vec{1.5}) == 1.5);
  CHECK(SublinearFn::one_norm(3).eval(Vec{1, -2, 3}) == 6.0);
  CHECK(SublinearFn::weighted_inf_norm({1.0, 2.0}).eval(Vec{1.0, -0.75}) == 1.5);
  CHECK(SublinearFn::max(3).eval(Vec{1, 5, -2}) == 5.0);
  Matrix a(2, 2);
  a(0, 0) = 2.0; a(0, 1) = 1.0; a(1, 0) = 1.0; a(1, 1) = 2.0;
  CHECK(SublinearFn::max_eigen(2).eval(svec(a)) == doctest::Approx(3.0));
  CHECK_THROWS_AS(SublinearFn::max(3).eval(Vec{1, 2}), DimensionError);
  CHECK_THROWS_AS(SublinearFn::weighted_inf_norm({1.0, -1.0}), InvalidArgument);
}

TEST_CASE("support set is the subdifferential at the origin") {
  for (const SublinearFn& f : catalog()) {
    INFO(f.name());
    for (const Vec& x : ball_points(f.dim(), 3.0, 100, 21)) {
      const Vec g = f.subgradient_at(x);
      CHECK(dot(g, x) == doctest::Approx(f.eval(x)).epsilon(1e-9));
      // g lies in the support set, so it is its own projection
      CHECK(distance(f.project_support(g), g) <= 1e-8);
      const Vec p = f.project_support(x);
      CHECK(dot(p, scaled(x, 1.0)) <= f.eval(x) + 1e-9);
      // projection optimality against the subgradient at a second point
      const Vec q = f.subgradient_at(scaled(x, -1.0));
      CHECK(dot(sub(x, p), sub(q, p)) <= 1e-8 * (1.0 + norm(x)));
    }
  }
}

TEST_CASE("price closed forms") {
  const SublinearFn m = SublinearFn::max(4);
  const SublinearFn one = SublinearFn::one_norm(3);
  const SublinearFn w = SublinearFn::weighted_inf_norm({1.0, 2.0});
  for (const Vec& x : ball_points(4, 3.0, 50, 2)) CHECK(m.price(x) == doctest::Approx(m.eval(x) + 0.5));
  for (const Vec& x : ball_points(3, 3.0, 50, 3)) CHECK(one.price(x) == doctest::Approx(one.eval(x) + 1.5));
  for (const Vec& x : ball_points(2, 3.0, 50, 4))
    CHECK(w.price(x) == doctest::Approx(std::max(std::abs(x[0]) + 0.5, 2.0 * std::abs(x[1]) + 2.0)));
  CHECK(SublinearFn::euclidean_norm(2).price(Vec{3.0, 4.0}) == doctest::Approx(5.5));
}

TEST_CASE("moreau envelope matches a brute-force infimal convolution") {
  for (const SublinearFn& f : {SublinearFn::relu(), SublinearFn::euclidean_norm(2), SublinearFn::weighted_inf_norm({1.0, 2.0}),
                               SublinearFn::max(2)}) {
    INFO(f.name());
    for (const Vec& x : ball_points(f.dim(), 3.0, 8, 17)) {
      const double ref = oracle::zoom_minimize(
          [&](const Vec& y) { return f.eval(y) + 0.5 * norm_sq(sub(x, y)); }, x, 6.0);
      CHECK(f.moreau(x) == doctest::Approx(ref).epsilon(1e-9));
    }
  }
  const SublinearFn one = SublinearFn::one_norm(3);
  const Vec x{0.3, -2.0, 1.2};
  CHECK(one.moreau(x) == doctest::Approx(oracle::huber(0.3) + oracle::huber(2.0) + oracle::huber(1.2)));
}

TEST_CASE("polytope support agrees with the built-in box") {
  const SublinearFn box = SublinearFn::one_norm(2);
  const SublinearFn poly = SublinearFn::polytope_support(*box.support_vertices());
  CHECK(poly.lipschitz() == doctest::Approx(std::sqrt(2.0)));
  for (const Vec& x : ball_points(2, 4.0, 100, 5)) {
    CHECK(poly.eval(x) == doctest::Approx(box.eval(x)));
    const Vec a = poly.project_support(x);
    const Vec b = box.project_support(x);
    CHECK(distance(a, b) <= 1e-8);
  }
  CHECK_FALSE(SublinearFn::one_norm(13).support_vertices().has_value());
}

TEST_CASE("max-eigen projection is the spectral simplex projection") {
  const SublinearFn f = SublinearFn::max_eigen(2);
  Matrix a(2, 2);
  a(0, 0) = 3.0; a(1, 1) = -1.0;
  const Vec p = f.project_support(svec(a));
  const Matrix m = smat(p);
  CHECK(m(0, 0) == doctest::Approx(1.0));
  CHECK(m(1, 1) == doctest::Approx(0.0));
  CHECK(m(0, 1) == doctest::Approx(0.0));
}

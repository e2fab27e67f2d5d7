#include <doctest.h>

#include <numeric>

#include "conesmooth/error.hpp"
#include "conesmooth/sampling.hpp"
#include "conesmooth/simplex.hpp"

using namespace conesmooth;

TEST_CASE("simplex projection") {
  const SimplexProjection p = project_simplex(Vec{0.5, 0.2, 0.3});
  CHECK(p.point[0] == doctest::Approx(0.5));
  CHECK(p.active == 3);

  const SimplexProjection q = project_simplex(Vec{2.0, 0.0, -1.0});
  CHECK(q.point == Vec{1.0, 0.0, 0.0});
  CHECK(q.threshold == doctest::Approx(1.0));

  for (const Vec& x : ball_points(5, 3.0, 200, 4)) {
    const Vec y = project_simplex(x).point;
    CHECK(std::accumulate(y.begin(), y.end(), 0.0) == doctest::Approx(1.0));
    // variational inequality against the vertices
    for (std::size_t i = 0; i < 5; ++i) {
      Vec e(5, 0.0);
      e[i] = 1.0;
      CHECK(dot(sub(x, y), sub(e, y)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(project_simplex(Vec{}), DimensionError);
}

TEST_CASE("simplex qp reproduces a projection") {
  // min 0.5 |l - y|^2 over the simplex is the qp with G = I and c = y.
  for (const Vec& y : ball_points(4, 2.0, 50, 8)) {
    const SimplexQpResult r = solve_simplex_qp(Matrix::identity(4), y);
    const Vec p = project_simplex(y).point;
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.lambda[i] == doctest::Approx(p[i]).epsilon(1e-8));
  }
}

TEST_CASE("simplex qp with collinear vertices") {
  // vertices (1,0), (0,1), (2,-1) lie on one line; the optimal point is unique
  // even though the weights are not.
  const std::vector<Vec> v = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, -2.0}, {2.0, -1.0}};
  const Vec y{2.5436802878811058, -0.15917015926336298};
  Matrix g(4, 4);
  Vec c(4);
  for (std::size_t i = 0; i < 4; ++i) {
    c[i] = dot(v[i], y);
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = dot(v[i], v[j]);
  }
  const SimplexQpResult r = solve_simplex_qp(g, c);
  Vec p(2, 0.0);
  for (std::size_t i = 0; i < 4; ++i) axpy(r.lambda[i], v[i], p);
  // projection of y onto the segment x + y = 1 between (0,1) and (2,-1)
  const double t = 0.5 * (y[0] - y[1] + 1.0);
  CHECK(p[0] == doctest::Approx(t).epsilon(1e-9));
  CHECK(p[1] == doctest::Approx(1.0 - t).epsilon(1e-9));
  CHECK(r.gradient_mapping <= 1e-10);
}

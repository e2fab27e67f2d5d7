#include <doctest.h>

#include <cmath>

#include "conesmooth/cone.hpp"
#include "conesmooth/error.hpp"
#include "conesmooth/sampling.hpp"

using namespace conesmooth;

namespace {

// Extreme rays of the exponential cone, unit length.
std::vector<Vec> exp_rays() {
  std::vector<Vec> rays = {{-1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};
  for (double rho = -40.0; rho <= 40.0; rho += 0.05) {
    Vec d = rho > 0.0 ? Vec{rho * std::exp(-rho), std::exp(-rho), 1.0} : Vec{rho, 1.0, std::exp(rho)};
    rays.push_back(scaled(d, 1.0 / norm(d)));
  }
  return rays;
}

}  // namespace

TEST_CASE("cone names") {
  for (ConeKind k : {ConeKind::Orthant, ConeKind::SecondOrder, ConeKind::PSD, ConeKind::Exponential})
    CHECK(cone_kind_from_string(to_string(k)) == k);
  CHECK(ConeModel::second_order(2).name() == "soc(2)");
  CHECK(ConeModel::exponential().name() == "exp");
  CHECK(ConeModel::psd(3).ambient_dim() == 6);
  CHECK(ConeModel::second_order(4).ambient_dim() == 5);
  CHECK_THROWS_AS(cone_kind_from_string("cube"), InvalidArgument);
  CHECK_THROWS_AS(ConeModel::psd(0), InvalidArgument);
}

TEST_CASE("orthant and second-order projections") {
  const ConeModel o = ConeModel::orthant(3);
  CHECK(o.project(Vec{1.0, -2.0, 0.5}) == Vec{1.0, 0.0, 0.5});
  CHECK(project_second_order(Vec{3.0, 4.0, 0.0}) == Vec{1.5, 2.0, 2.5});
  CHECK(project_second_order(Vec{1.0, 0.0, -2.0}) == Vec{0.0, 0.0, 0.0});
  const ConeModel k = ConeModel::second_order(2);
  for (const Vec& x : ball_points(3, 5.0, 200, 3)) {
    const Vec p = k.project(x);
    const Vec r = sub(x, p);
    CHECK(k.contains(p));
    CHECK(k.contains(scaled(r, -1.0)));  // self-dual: the residual is in the polar cone
    CHECK(std::abs(dot(r, p)) <= 1e-12 * (1.0 + norm_sq(x)));
  }
}

TEST_CASE("psd projection clips eigenvalues") {
  Matrix a(2, 2);
  a(0, 0) = 1.0; a(0, 1) = 2.0; a(1, 0) = 2.0; a(1, 1) = 1.0;  // eigenvalues 3 and -1
  const Matrix p = smat(project_psd(svec(a)));
  CHECK(p(0, 0) == doctest::Approx(1.5));
  CHECK(p(0, 1) == doctest::Approx(1.5));
  CHECK(p(1, 1) == doctest::Approx(1.5));
  const ConeModel k = ConeModel::psd(3);
  for (const Vec& x : ball_points(6, 3.0, 100, 5)) {
    const Vec q = k.project(x);
    const Vec r = sub(x, q);
    CHECK(k.contains(q));
    CHECK(k.contains(scaled(r, -1.0)));
    CHECK(std::abs(dot(r, q)) <= 1e-10);
  }
}

TEST_CASE("exponential membership") {
  CHECK(in_exponential(Vec{0.0, 1.0, 1.0}, 1e-12));
  CHECK(in_exponential(Vec{1.0, 1.0, std::exp(1.0)}, 1e-12));
  CHECK_FALSE(in_exponential(Vec{1.0, 1.0, 2.7}, 1e-12));
  CHECK(in_exponential(Vec{-3.0, 0.0, 0.5}, 1e-12));
  CHECK_FALSE(in_exponential(Vec{1.0, 0.0, 5.0}, 1e-9));
  CHECK_FALSE(in_exponential(Vec{0.0, -1.0, 1.0}, 1e-9));
}

TEST_CASE("exponential projection optimality certificate") {
  const std::vector<Vec> rays = exp_rays();
  std::vector<Vec> probes = ball_points(3, 10.0, 400, 11);
  for (const Vec& x : ball_points(3, 1e-3, 50, 12)) probes.push_back(x);
  probes.push_back({1.0, 1.0, 1.0});
  probes.push_back({-1.0, -1.0, -1.0});
  probes.push_back({5.0, -0.001, 1.0});
  probes.push_back({-200.0, 0.5, 0.1});
  for (const Vec& v : probes) {
    INFO(v[0] << " " << v[1] << " " << v[2]);
    const Vec p = project_exponential(v);
    CHECK(in_exponential(p, 1e-10 * (1.0 + norm(v))));
    const Vec r = sub(v, p);
    const double rn = norm(r);
    if (rn <= 1e-14 * (1.0 + norm(v))) continue;
    double angle = -1.0;
    for (const Vec& k : rays) angle = std::max(angle, dot(r, k) / rn);
    CHECK(angle <= 1e-9);
    if (norm(p) > 0.0) CHECK(std::abs(dot(r, p)) / (rn * norm(p)) <= 1e-8);
  }
}

TEST_CASE("sampled normals are polar to sampled members") {
  for (const ConeModel& k : {ConeModel::orthant(3), ConeModel::second_order(2), ConeModel::psd(2), ConeModel::exponential()}) {
    INFO(k.name());
    const std::vector<Vec> normals = k.normal_sampler(5, 300);
    const std::vector<Vec> members = k.member_sampler(6, 300);
    CHECK(normals.size() == 300);
    double worst = -1.0;
    for (const Vec& z : normals) {
      CHECK(norm(z) == doctest::Approx(1.0));
      for (const Vec& m : members) worst = std::max(worst, dot(z, m));
    }
    CHECK(worst <= 1e-8);
    for (const Vec& m : members) CHECK(k.contains(m));
    CHECK(k.contains(k.interior_point(), 0.0));
  }
}

TEST_CASE("lifted cone of the unit disc is the second-order cone") {
  const ConeModel k = ConeModel::lifted({[](VecView p) { return norm(p) <= 1.0; }, {0.0, 0.0}, 1.0});
  CHECK(k.kind() == ConeKind::Lifted);
  CHECK(k.ambient_dim() == 3);
  CHECK_FALSE(k.has_projection());
  CHECK_THROWS_AS(k.project(Vec{1.0, 0.0, 0.0}), UnsupportedError);
  const ConeModel soc = ConeModel::second_order(2);
  for (const Vec& x : ball_points(3, 2.0, 300, 8)) {
    if (std::abs(norm(Vec{x[0], x[1]}) - x[2]) < 1e-6) continue;
    CHECK(k.contains(x) == soc.contains(x));
  }
  CHECK(k.contains(Vec{0.0, 0.0, 0.0}));
}

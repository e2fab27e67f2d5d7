#include <doctest.h>

#include <cmath>

#include "conesmooth/cone_smoothing.hpp"
#include "conesmooth/error.hpp"
#include "conesmooth/numeric_core.hpp"

using namespace conesmooth;

TEST_CASE("estimated cores match the closed forms") {
  const double s3 = std::sqrt(3.0);
  struct Case {
    ConeModel cone;
    Vec center;
  };
  const Case cases[] = {
      {ConeModel::orthant(3), {1.0, 1.0, 1.0}},
      {ConeModel::second_order(2), {0.0, 0.0, std::sqrt(2.0)}},
      {ConeModel::psd(2), {1.0, 0.0, 1.0}},
  };
  for (const Case& c : cases) {
    INFO(c.cone.name());
    const CoreEstimate e = estimate_core(c.cone, 5000, 7);
    CHECK(distance(e.center_estimate, c.center) <= 1e-3);
    CHECK(e.width_estimate == doctest::Approx(norm(c.center) - 1.0).epsilon(1e-3));
    CHECK(e.max_violation <= 1e-8);
    CHECK(uniqueness_probe(e, 500));
  }
  CHECK(cone_core(ConeModel::orthant(3)).width == doctest::Approx(s3 - 1.0));
}

TEST_CASE("width estimates grow with the sample count") {
  const ConeModel k = ConeModel::second_order(3);
  double last = 0.0;
  for (std::size_t n : {50u, 200u, 1000u, 4000u}) {
    const CoreEstimate e = estimate_core(k, n, 3);
    CHECK(e.width_estimate >= last - 1e-9);
    CHECK(e.width_estimate <= std::sqrt(2.0) - 1.0 + 1e-9);
    last = e.width_estimate;
  }
}

TEST_CASE("exponential core is not a translated cone") {
  const CoreEstimate e = estimate_core(ConeModel::exponential(), 4000, 7);
  CHECK(e.center_estimate[0] == doctest::Approx(-1.1195).epsilon(1e-2));
  CHECK(e.center_estimate[1] == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(e.center_estimate[2] == doctest::Approx(1.7148).epsilon(1e-2));
  CHECK_FALSE(uniqueness_probe(e, 1000));
  const Halfspaces h = e.halfspaces();
  CHECK(h.size() == e.normals.size());
  CHECK(h.max_violation(e.center_estimate) <= 1e-8);
}

TEST_CASE("sampled normal fans are valid and deduplicated") {
  const std::vector<Vec> fan = sample_normal_fan(ConeModel::orthant(2), 500, 1);
  for (const Vec& z : fan) {
    CHECK(z[0] <= 1e-12);
    CHECK(z[1] <= 1e-12);
  }
  for (std::size_t i = 0; i < fan.size(); ++i)
    for (std::size_t j = i + 1; j < fan.size(); ++j) CHECK(dot(fan[i], fan[j]) < std::cos(1e-4));
}

TEST_CASE("estimates are reproducible for a seed") {
  const CoreEstimate a = estimate_core(ConeModel::psd(2), 800, 42);
  const CoreEstimate b = estimate_core(ConeModel::psd(2), 800, 42);
  CHECK(a.center_estimate == b.center_estimate);
  CHECK(a.width_estimate == b.width_estimate);
}

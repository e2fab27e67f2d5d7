#include <doctest.h>

#include "conesmooth/linalg.hpp"
#include "conesmooth/sampling.hpp"

using namespace conesmooth;

TEST_CASE("halton points are seeded and prefix stable") {
  const Halton a(3, 11);
  const Halton b(3, 11);
  const Halton c(3, 12);
  CHECK(a.point(5) == b.point(5));
  CHECK(a.point(5) != c.point(5));
  for (std::uint64_t k = 0; k < 200; ++k)
    for (double v : a.point(k)) {
      CHECK(v > 0.0);
      CHECK(v < 1.0);
    }
}

TEST_CASE("sphere and ball samples") {
  const auto s = sphere_points(4, 300, 5);
  REQUIRE(s.size() == 300);
  for (const Vec& p : s) CHECK(norm(p) == doctest::Approx(1.0));
  const auto longer = sphere_points(4, 400, 5);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(longer[i] == s[i]);

  const auto b = ball_points(3, 2.5, 500, 9);
  double largest = 0.0;
  for (const Vec& p : b) {
    CHECK(norm(p) <= 2.5 + 1e-12);
    largest = std::max(largest, norm(p));
  }
  CHECK(largest > 2.0);
}

TEST_CASE("nearby pairs span three decades of spacing") {
  const auto pairs = nearby_pairs(2, 1.0, 400, 3);
  double lo = 1e9, hi = 0.0;
  for (const auto& [x, y] : pairs) {
    const double d = distance(x, y);
    CHECK(d > 0.0);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  CHECK(lo < 5e-3);
  CHECK(hi > 0.2);
}

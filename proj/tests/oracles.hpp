#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

// Reference formulas derived by hand, kept independent of the library code.
namespace oracle {

using Vec = std::vector<double>;

// Minimum of a convex function on a box around `center` by repeated grid
// refinement; each level keeps the best grid point and shrinks the box.
inline double zoom_minimize(const std::function<double(const Vec&)>& f, Vec center, double half, int levels = 40,
                            int grid = 21) {
  const std::size_t dim = center.size();
  double best = f(center);
  for (int level = 0; level < levels; ++level) {
    Vec best_point = center;
    std::vector<int> idx(dim, 0);
    for (;;) {
      Vec p(dim);
      for (std::size_t i = 0; i < dim; ++i) p[i] = center[i] - half + 2.0 * half * idx[i] / (grid - 1);
      const double v = f(p);
      if (v < best) {
        best = v;
        best_point = p;
      }
      std::size_t k = 0;
      while (k < dim && ++idx[k] == grid) idx[k++] = 0;
      if (k == dim) break;
    }
    center = best_point;
    half *= 0.25;
  }
  return best;
}

// (price + |.|^2 / 2) infimal convolution, evaluated by zoom_minimize.
inline double inf_conv(const std::function<double(const Vec&)>& price, const Vec& x, double half = 8.0) {
  return zoom_minimize(
      [&](const Vec& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
        return price(y) + 0.5 * s;
      },
      x, half);
}

inline double huber(double r) { return std::abs(r) <= 1.0 ? 0.5 * r * r : std::abs(r) - 0.5; }

// Minimal general 1-smoothing of max(x, 0): inf-convolution of max(0, y + 1/2)
// with the square, minus half the width 1/8.
inline double relu_general(double x) {
  double inner = 0.0;
  if (x >= 0.5) inner = x;
  else if (x > -0.5) inner = 0.5 * (x + 0.5) * (x + 0.5);
  return inner - 1.0 / 16.0;
}

// Minimal general 1-smoothing of max_i x_i by the sorted threshold formula.
inline double max_general(const Vec& x) {
  const std::size_t d = x.size();
  Vec s = x;
  std::sort(s.begin(), s.end(), std::greater<>());
  std::size_t j = 1;
  double acc = 0.0;
  for (std::size_t k = 1; k <= d; ++k) {
    acc += s[k - 1];
    if (s[k - 1] - (acc - 1.0) / static_cast<double>(k) > 0.0) j = k;
  }
  const double alpha = (std::accumulate(s.begin(), s.begin() + static_cast<long>(j), 0.0) - 1.0) / static_cast<double>(j);
  double q = 0.0;
  for (std::size_t i = 0; i < j; ++i) q += (s[i] - alpha) * (s[i] - alpha);
  return alpha + 0.5 * q + 0.25 * (1.0 + 1.0 / static_cast<double>(d));
}

// Largest outer 1-smoothing of max(|x1|, 2|x2|), piecewise.
inline double weighted_inf_outer(const Vec& x) {
  const double a = std::abs(x[0]);
  const double b = std::abs(x[1]);
  if (a + 0.5 * b <= 1.0) return 0.5 * (a * a + b * b);
  if (2.0 * b - a <= -1.0) return a - 0.5;
  if (2.0 * b - a >= 4.0) return 2.0 * b - 2.0;
  const double t = 2.0 * b - a;
  return (4.0 * a + 2.0 * b - 2.0 + 0.5 * t * t) / 5.0;
}

// Smallest outer 1-smoothing of the same norm: the largest one with the x1
// axis cut open by 3/2 on either side.
inline double weighted_inf_outer_min(const Vec& x) {
  if (std::abs(x[0]) <= 1.5) return weighted_inf_outer({0.0, x[1]});
  if (x[0] < -1.5) return weighted_inf_outer({x[0] + 1.5, x[1]});
  return weighted_inf_outer({x[0] - 1.5, x[1]});
}

}  // namespace oracle

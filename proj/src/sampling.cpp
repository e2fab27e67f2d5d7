#include "conesmooth/sampling.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <random>

#include "conesmooth/error.hpp"

namespace conesmooth {

namespace {

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t c = 2; primes.size() < count; ++c) {
    bool is_prime = true;
    for (std::uint32_t p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) primes.push_back(c);
  }
  return primes;
}

double radical_inverse(std::uint64_t index, std::uint32_t base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

double clamp_open(double u) {
  constexpr double lo = 1e-12;
  if (u < lo) return lo;
  if (u > 1.0 - lo) return 1.0 - lo;
  return u;
}

double inverse_normal(double u) { return std::sqrt(2.0) * boost::math::erf_inv(2.0 * u - 1.0); }

Vec direction_from(const Vec& u, std::size_t dim) {
  Vec g(dim);
  for (std::size_t i = 0; i < dim; ++i) g[i] = inverse_normal(u[i]);
  const double n = norm(g);
  if (n < 1e-300) return basis(dim, 0);
  for (double& v : g) v /= n;
  return g;
}

}  // namespace

Halton::Halton(std::size_t dim, std::uint64_t seed)
    : dim_(dim), primes_(first_primes(dim)), shift_(dim) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (double& s : shift_) s = unif(rng);
}

Vec Halton::point(std::uint64_t index) const {
  Vec u(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    double v = radical_inverse(index + 1, primes_[i]) + shift_[i];
    v -= std::floor(v);
    u[i] = clamp_open(v);
  }
  return u;
}

std::vector<Vec> sphere_points(std::size_t dim, std::size_t n, std::uint64_t seed) {
  if (dim == 0) throw InvalidArgument("sphere_points: dimension must be positive");
  std::vector<Vec> out;
  out.reserve(n);
  if (dim == 1) {
    for (std::size_t k = 0; k < n; ++k) out.push_back({k % 2 == 0 ? 1.0 : -1.0});
    return out;
  }
  const Halton h(dim, seed);
  for (std::size_t k = 0; k < n; ++k) out.push_back(direction_from(h.point(k), dim));
  return out;
}

std::vector<Vec> ball_points(std::size_t dim, double radius, std::size_t n, std::uint64_t seed) {
  if (dim == 0) throw InvalidArgument("ball_points: dimension must be positive");
  if (!(radius > 0.0)) throw InvalidArgument("ball_points: radius must be positive");
  std::vector<Vec> out;
  out.reserve(n);
  const Halton h(dim + 1, seed);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec u = h.point(k);
    Vec x;
    if (dim == 1) {
      x = {2.0 * u[0] - 1.0};
    } else {
      x = direction_from(u, dim);
    }
    const double r = radius * (dim == 1 ? 1.0 : std::pow(u[dim], 1.0 / static_cast<double>(dim)));
    for (double& v : x) v *= r;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::pair<Vec, Vec>> nearby_pairs(std::size_t dim, double radius, std::size_t n,
                                              std::uint64_t seed) {
  const auto base = ball_points(dim, radius, n, seed);
  const auto dirs = sphere_points(dim, n, seed ^ 0x9e3779b97f4a7c15ULL);
  const Halton h(1, seed + 17);
  std::vector<std::pair<Vec, Vec>> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = radius * std::pow(10.0, -3.0 * h.point(k)[0]);
    Vec y = base[k];
    axpy(s, dirs[k], y);
    out.emplace_back(base[k], std::move(y));
  }
  return out;
}

}  // namespace conesmooth

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "../core/monomial.hpp"
#include "../errors.hpp"
#include "../weights/weight_family.hpp"

namespace levicert {

using Point = std::vector<Complex>;

/// Deterministic sampling of the neighborhood U = {|z_i| <= radius} and of the
/// level sets r = fraction * delta used by the checks.
struct SamplePlan {
  double radius = 0.5;
  int radial_points = 64;
  int phase_points = 8;
  int random_points = 64;
  /// Smallest log-spaced radius is radial_floor * radius.
  double radial_floor = 1e-6;
  std::vector<double> deltas = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  /// r / delta levels inside the strip -delta < r <= 0.
  std::vector<double> strip_levels = {-0.999, -0.9, -0.75, -0.5, -0.25, 0.0};
  /// r / delta levels across Omega_delta (r < delta), including the hinge region.
  std::vector<double> domain_levels = {-4.0, -3.5, -3.0, -2.9, -2.75, -2.5, -2.25, -2.0,
                                       -1.5, -1.0, -0.5, 0.0,  0.5,   0.9,  0.999};
  /// r / delta levels where the weight must vanish identically.
  std::vector<double> flat_levels = {-3.0, -4.0};
  std::uint64_t seed = 0x1e71c0de;

  void validate() const {
    if (!(radius > 0.0 && radius <= 1.0))
      throw InvalidInput("plan radius must lie in (0, 1]");
    if (radial_points < 2 || phase_points < 1 || random_points < 0)
      throw InvalidInput("plan needs >= 2 radial points, >= 1 phase point, >= 0 random points");
    if (!(radial_floor > 0.0 && radial_floor < 1.0))
      throw InvalidInput("radial floor must lie in (0, 1)");
    if (deltas.empty())
      throw InvalidInput("plan needs at least one delta");
    for (double d : deltas)
      if (!(d > 0.0 && d < 1.0))
        throw InvalidInput("every delta must lie in (0, 1)");
    for (double s : strip_levels)
      if (!(s > -1.0 && s <= 0.0))
        throw InvalidInput("strip levels must lie in (-1, 0]");
    for (double s : domain_levels)
      if (!(s < 1.0))
        throw InvalidInput("domain levels must lie below 1");
    for (double s : flat_levels)
      if (!(s <= -3.0))
        throw InvalidInput("flat levels must lie at or below -3");
  }
};

/// delta = 10^{-k} for k = first..last.
inline std::vector<double> delta_decades(int first, int last) {
  if (first < 1 || last < first || last > 300)
    throw InvalidInput("delta decades must satisfy 1 <= first <= last");
  std::vector<double> out;
  for (int k = first; k <= last; ++k)
    out.push_back(std::pow(10.0, -k));
  return out;
}

namespace detail {

inline double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<double> log_radii(const SamplePlan &plan) {
  std::vector<double> r(plan.radial_points);
  const double lo = std::log10(plan.radial_floor);
  for (int k = 0; k < plan.radial_points; ++k)
    r[k] = plan.radius * std::pow(10.0, lo - lo * k / (plan.radial_points - 1));
  r.back() = plan.radius;
  return r;
}

inline Complex polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

inline double phase(const SamplePlan &plan, int p) {
  return 2.0 * std::numbers::pi * p / plan.phase_points;
}

} // namespace detail

/// Scaled radii |z_i| / tau_i pinned in every sweep: the regime boundaries
/// 1/sqrt(2) and 1, and the minimizer of the scaled resolve entry.
inline std::vector<double> regime_anchors(const WeightFamily &w, std::size_t i) {
  return {1.0 / std::sqrt(2.0), 1.0, w.critical_scaled_radius(i)};
}

/// Radii sampled on the z_i axis: 0, the log grid, and tau_i times each anchor
/// (when inside U). Sorted, duplicates removed.
inline std::vector<double> axis_radii(const SamplePlan &plan, const WeightFamily *w, std::size_t i,
                                      double delta) {
  auto r = detail::log_radii(plan);
  r.push_back(0.0);
  if (w) {
    const double tau_i = w->tau_at(i, delta);
    for (double s : regime_anchors(*w, i))
      if (tau_i * s <= plan.radius)
        r.push_back(tau_i * s);
  }
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

/// Points of U: the origin; every coordinate axis over radii x phases; a
/// diagonal family with all coordinates at a common radius (and, with
/// weights, at common scaled anchors); and seeded pseudo-random points.
/// Without weights the set is independent of delta.
inline std::vector<Point> sample_points(const SamplePlan &plan, std::size_t n,
                                        const WeightFamily *w = nullptr, double delta = 0.0) {
  plan.validate();
  if (w && w->dimension() != n)
    throw InvalidInput("weight family dimension does not match plan dimension");
  std::vector<Point> pts;
  pts.emplace_back(n, Complex(0.0, 0.0));

  for (std::size_t i = 0; i < n; ++i)
    for (double r : axis_radii(plan, w, i, delta)) {
      if (r == 0.0)
        continue;
      for (int p = 0; p < plan.phase_points; ++p) {
        Point z(n, Complex(0.0, 0.0));
        z[i] = detail::polar(r, detail::phase(plan, p));
        pts.push_back(std::move(z));
      }
    }

  if (n > 1) {
    auto diagonal = [&](auto radius_of) {
      for (int p = 0; p < plan.phase_points; ++p) {
        Point z(n);
        for (std::size_t j = 0; j < n; ++j)
          z[j] = detail::polar(radius_of(j), detail::phase(plan, p) * static_cast<double>(j + 1));
        pts.push_back(std::move(z));
      }
    };
    for (double r : detail::log_radii(plan))
      diagonal([r](std::size_t) { return r; });
    if (w) {
      std::vector<std::vector<double>> anchors;
      for (std::size_t j = 0; j < n; ++j)
        anchors.push_back(regime_anchors(*w, j));
      for (std::size_t a = 0; a < anchors.front().size(); ++a)
        diagonal([&](std::size_t j) {
          return std::min(plan.radius, w->tau_at(j, delta) * anchors[j][a]);
        });
    }
  }

  std::mt19937_64 rng(plan.seed);
  const double lo = std::log10(plan.radial_floor);
  for (int k = 0; k < plan.random_points; ++k) {
    Point z(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double zero_draw = detail::unit_uniform(rng);
      const double radial = detail::unit_uniform(rng);
      const double angle = detail::unit_uniform(rng);
      z[j] = zero_draw < 0.25
                 ? Complex(0.0, 0.0)
                 : detail::polar(plan.radius * std::pow(10.0, lo * radial),
                                 2.0 * std::numbers::pi * angle);
    }
    pts.push_back(std::move(z));
  }
  return pts;
}

} // namespace levicert

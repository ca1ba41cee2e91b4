#pragma once

#include <algorithm>
#include <cmath>

namespace levicert {

/// Convex increasing C^2 hinge p(t) = max(t - e^{-2}, 0)^3, flat below e^{-2}.
struct Hinge {
  static double knee() { return std::exp(-2.0); }

  double operator()(double t) const {
    const double x = std::max(t - knee(), 0.0);
    return x * x * x;
  }
  double d1(double t) const {
    const double x = std::max(t - knee(), 0.0);
    return 3.0 * x * x;
  }
  double d2(double t) const { return 6.0 * std::max(t - knee(), 0.0); }
};

inline Hinge build_hinge() { return {}; }

} // namespace levicert

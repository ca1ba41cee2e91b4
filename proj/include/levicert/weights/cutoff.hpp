#pragma once

#include <algorithm>
#include <cmath>

namespace levicert {

/// Smooth cutoff chi with chi(t) = t on [0, 1/2] and chi(t) = 0 on [1, inf),
/// glued by the exp(-1/x) smoothstep: chi(t) = t * s(2(1 - t)).
class Cutoff {
public:
  Cutoff() : bound_(measure_bound()) {}

  double operator()(double t) const { return t * step(2.0 * (1.0 - t)).value; }

  static double d1(double t) {
    const auto s = step(2.0 * (1.0 - t));
    return s.value - 2.0 * t * s.d1;
  }

  static double d2(double t) {
    const auto s = step(2.0 * (1.0 - t));
    return -4.0 * s.d1 + 4.0 * t * s.d2;
  }

  /// M >= sup_{[0,1]} |chi'| + |chi''|, measured on a 1e5-point grid with a
  /// 1.05 safety factor.
  double derivative_bound() const noexcept { return bound_; }

  static constexpr int kBoundGridPoints = 100'000;
  static constexpr double kBoundSafety = 1.05;

private:
  struct Jet {
    double value, d1, d2;
  };

  // phi(x) = exp(-1/x) for x > 0; returns (phi, phi', phi'').
  static Jet phi(double x) {
    if (x <= 0.0)
      return {0.0, 0.0, 0.0};
    const double e = std::exp(-1.0 / x);
    const double x2 = x * x;
    return {e, e / x2, e * (1.0 - 2.0 * x) / (x2 * x2)};
  }

  // s(x) = phi(x) / (phi(x) + phi(1 - x)): 0 for x <= 0, 1 for x >= 1.
  static Jet step(double x) {
    if (x <= 0.0)
      return {0.0, 0.0, 0.0};
    if (x >= 1.0)
      return {1.0, 0.0, 0.0};
    const Jet a = phi(x);
    const Jet bm = phi(1.0 - x);
    const Jet b{bm.value, -bm.d1, bm.d2};
    const double den = a.value + b.value;
    const double num = a.d1 * b.value - a.value * b.d1;
    const double num_d = a.d2 * b.value - a.value * b.d2;
    const double den_d = a.d1 + b.d1;
    return {a.value / den, num / (den * den), num_d / (den * den) - 2.0 * num * den_d / (den * den * den)};
  }

  static double measure_bound() {
    double sup = 0.0;
    for (int k = 0; k <= kBoundGridPoints; ++k) {
      const double t = static_cast<double>(k) / kBoundGridPoints;
      sup = std::max(sup, std::abs(d1(t)) + std::abs(d2(t)));
    }
    return kBoundSafety * sup;
  }

  double bound_;
};

} // namespace levicert

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "../core/hermitian_form.hpp"
#include "../core/monomial.hpp"
#include "../weights/weight_family.hpp"
#include "eigen.hpp"
#include "fd_hessian.hpp"
#include "parallel.hpp"
#include "sample_plan.hpp"

namespace levicert {

/// One line of a certificate. `margin` is the check's worst measured
/// statistic (see README for the meaning per check name); `witness` and
/// `delta` locate where it was attained.
struct CheckRecord {
  std::string name;
  bool pass = false;
  double margin = 0.0;
  std::optional<AmbientPoint> witness;
  std::optional<double> delta;

  bool operator==(const CheckRecord &) const = default;
};

inline constexpr double kResolveSlack = 1e-6;
inline constexpr double kPshFloor = -1e-9;
inline constexpr double kDominanceFloor = -1e-9;
inline constexpr double kScalingTolerance = 1e-6;
inline constexpr double kStripStabilityTolerance = 0.05;
inline constexpr double kFdTolerance = 1e-5;

namespace detail {

struct Extremum {
  double value;
  std::size_t index;
};

/// Smallest value; ties go to the lowest index so the witness is deterministic.
inline Extremum arg_min(const std::vector<double> &v) {
  Extremum e{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < e.value || std::isnan(v[i])) {
      e = {v[i], i};
      if (std::isnan(v[i]))
        break;
    }
  return e;
}

inline double relative_spread(const std::vector<double> &v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi == 0.0 ? 0.0 : (*hi - *lo) / std::abs(*hi);
}

inline double gradient_norm2(const std::vector<Complex> &g) {
  double s = 0.0;
  for (const auto &x : g)
    s += std::norm(x);
  return s;
}

} // namespace detail

/// delta^{2 epsilon}; multiplying a Hessian eigenvalue by it gives the
/// quantity compared against the delta-free constants.
inline double margin_scale(const WeightFamily &w, double delta) {
  check_delta(delta);
  return std::exp(2.0 * to_double(w.epsilon) * std::log(delta));
}

/// min-eig(Levi(u)/delta + Hess rho_delta) * delta^{2 epsilon}.
inline double resolve_margin(const MixedTerm &u, const WeightFamily &w, const Point &z,
                             double delta) {
  return hermitian_min_eigenvalue(resolve_hessian(u, w, z, delta)) * margin_scale(w, delta);
}

/// Literal coefficient |z_i|^{2m_i - 2}/delta + (Hess rho)_{ii} at z = r e_i, times delta^{2 epsilon}.
inline double resolve_literal_margin(const WeightFamily &w, std::size_t i, double r, double delta) {
  Point z(w.dimension(), Complex(0.0, 0.0));
  z[i] = Complex(r, 0.0);
  const auto m = w.pure_powers[i];
  const double levi = std::pow(r, 2.0 * m - 2.0) / delta;
  return (levi + rho_hessian(w, z, delta)(i, i).real()) * margin_scale(w, delta);
}

/// Resolve inequality over the plan: one record per delta, then the
/// delta-invariance of the margins ("resolve_scaling").
inline std::vector<CheckRecord> check_resolve(const MixedTerm &u, const WeightFamily &w,
                                              const SamplePlan &plan) {
  std::vector<CheckRecord> out;
  std::vector<double> margins;
  for (double delta : plan.deltas) {
    const auto pts = sample_points(plan, u.dimension(), &w, delta);
    const auto vals = parallel_map<double>(
        pts.size(), [&](std::size_t k) { return resolve_margin(u, w, pts[k], delta); });
    const auto worst = detail::arg_min(vals);
    margins.push_back(worst.value);
    out.push_back({"resolve", worst.value >= w.C * (1.0 - kResolveSlack), worst.value,
                   AmbientPoint{pts[worst.index], Complex(0.0, 0.0)}, delta});
  }
  const double spread = detail::relative_spread(margins);
  out.push_back({"resolve_scaling", spread <= kScalingTolerance, spread, std::nullopt, std::nullopt});
  return out;
}

/// The same bound with the coefficient as literally written (first term
/// without the m_i^2 factor), on every coordinate axis.
inline std::vector<CheckRecord> check_resolve_literal(const WeightFamily &w,
                                                      const SamplePlan &plan) {
  std::vector<CheckRecord> out;
  for (double delta : plan.deltas) {
    double worst = std::numeric_limits<double>::infinity();
    Point witness;
    for (std::size_t i = 0; i < w.dimension(); ++i)
      for (double r : axis_radii(plan, &w, i, delta)) {
        const double v = resolve_literal_margin(w, i, r, delta);
        if (v < worst) {
          worst = v;
          witness.assign(w.dimension(), Complex(0.0, 0.0));
          witness[i] = Complex(r, 0.0);
        }
      }
    out.push_back({"resolve_literal", worst >= w.C * (1.0 - kResolveSlack), worst,
                   AmbientPoint{witness, Complex(0.0, 0.0)}, delta});
  }
  return out;
}

/// min-eig(Levi(u1) - Levi(u2)) / (1 + tr Levi(u1) + tr Levi(u2)).
inline double dominance_margin(const MixedTerm &u1, const MixedTerm &u2, const Point &z) {
  const auto l1 = levi_form(u1, z);
  const auto l2 = levi_form(u2, z);
  return hermitian_min_eigenvalue(l1 - l2) / (1.0 + std::abs(l1.trace()) + std::abs(l2.trace()));
}

/// Levi(u1) >= Levi(u2) at every given point.
inline CheckRecord check_dominance(const MixedTerm &u1, const MixedTerm &u2,
                                   const std::vector<Point> &points) {
  if (u1.dimension() != u2.dimension())
    throw InvalidInput("dominance needs mixed terms of equal dimension");
  const auto vals = parallel_map<double>(
      points.size(), [&](std::size_t k) { return dominance_margin(u1, u2, points[k]); });
  const auto worst = detail::arg_min(vals);
  return {"dominance", worst.value >= kDominanceFloor, worst.value,
          AmbientPoint{points[worst.index], Complex(0.0, 0.0)}, std::nullopt};
}

inline CheckRecord check_dominance(const MixedTerm &u1, const MixedTerm &u2,
                                   const SamplePlan &plan) {
  return check_dominance(u1, u2, sample_points(plan, u1.dimension()));
}

/// Pointwise floor for the strip Hessian, times delta^{-2 epsilon}:
/// p'(e^{-1}) e^{-3} C / (1 + 2 |grad u(z)|^2). The denominator converts the
/// bound in the tangential frame to the standard basis of C^{n+1}.
inline double strip_floor(const MixedTerm &u, const WeightFamily &w, const Point &z) {
  return w.hinge.d1(std::exp(-1.0)) * std::exp(-3.0) * w.C /
         (1.0 + 2.0 * detail::gradient_norm2(mixed_gradient(u, z)));
}

/// C' = p(e + e^{-3}), the uniform bound for lambda_delta on Omega_delta.
inline double uniform_bound(const WeightFamily &w) {
  return w.hinge(std::numbers::e + std::exp(-3.0));
}

struct WeightFamilyReport {
  std::vector<CheckRecord> records;
  std::vector<double> strip_constants; // measured inf of min-eig * delta^{2 eps} per delta
  double strip_constant_measured = 0.0;
  double strip_constant_theory = 0.0;
};

/// Hypotheses on lambda_delta = p(lambda~_delta) for the rigid domain with
/// mixed term u: plurisubharmonicity on Omega_delta, the strip lower bound,
/// exact flatness on r <= -3 delta and the uniform bound |lambda| <= C'.
inline WeightFamilyReport check_weight_family(const MixedTerm &u, const WeightFamily &w,
                                              const SamplePlan &plan) {
  WeightFamilyReport rep;
  const double c_prime = uniform_bound(w);
  double max_grad2 = 0.0;

  struct Sample {
    double psh = std::numeric_limits<double>::infinity(); // min-eig / (1 + |trace|)
    double strip = std::numeric_limits<double>::infinity();
    double strip_ratio = std::numeric_limits<double>::infinity(); // strip / floor
    double flat = 0.0;                                              // max |value|, |H|
    double lambda_max = 0.0;
    std::size_t psh_level = 0, strip_level = 0, flat_level = 0, lambda_level = 0;
    double grad2 = 0.0;
  };

  for (double delta : plan.deltas) {
    const auto pts = sample_points(plan, u.dimension(), &w, delta);
    const double scale = margin_scale(w, delta);

    const auto samples = parallel_map<Sample>(pts.size(), [&](std::size_t k) {
      Sample s;
      const auto &z = pts[k];
      s.grad2 = detail::gradient_norm2(mixed_gradient(u, z));
      const double floor = strip_floor(u, w, z);
      for (std::size_t l = 0; l < plan.domain_levels.size(); ++l) {
        const auto p = point_at_level(u, z, plan.domain_levels[l] * delta);
        const auto h = lambda_hessian(u, w, p, delta);
        const double v = hermitian_min_eigenvalue(h) / (1.0 + std::abs(h.trace()));
        if (v < s.psh) {
          s.psh = v;
          s.psh_level = l;
        }
        const double lam = std::abs(lambda_value(u, w, p, delta));
        if (lam > s.lambda_max) {
          s.lambda_max = lam;
          s.lambda_level = l;
        }
      }
      for (std::size_t l = 0; l < plan.strip_levels.size(); ++l) {
        const auto p = point_at_level(u, z, plan.strip_levels[l] * delta);
        const double v = hermitian_min_eigenvalue(lambda_hessian(u, w, p, delta)) * scale;
        if (v < s.strip) {
          s.strip = v;
          s.strip_level = l;
        }
        s.strip_ratio = std::min(s.strip_ratio, v / floor);
      }
      for (std::size_t l = 0; l < plan.flat_levels.size(); ++l) {
        const auto p = point_at_level(u, z, plan.flat_levels[l] * delta);
        const double v = std::max(std::abs(lambda_value(u, w, p, delta)),
                                  lambda_hessian(u, w, p, delta).max_norm());
        if (v > s.flat || std::isnan(v)) {
          s.flat = v;
          s.flat_level = l;
        }
      }
      return s;
    });

    std::vector<double> psh(pts.size()), strip(pts.size()), ratio(pts.size()),
        neg_flat(pts.size()), neg_lambda(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      psh[k] = samples[k].psh;
      strip[k] = samples[k].strip;
      ratio[k] = samples[k].strip_ratio;
      neg_flat[k] = -samples[k].flat;
      neg_lambda[k] = -samples[k].lambda_max;
      max_grad2 = std::max(max_grad2, samples[k].grad2);
    }

    const auto wp = detail::arg_min(psh);
    rep.records.push_back(
        {"psh", wp.value >= kPshFloor, wp.value,
         point_at_level(u, pts[wp.index], plan.domain_levels[samples[wp.index].psh_level] * delta),
         delta});

    const auto ws = detail::arg_min(strip);
    const auto wr = detail::arg_min(ratio);
    rep.strip_constants.push_back(ws.value);
    rep.records.push_back(
        {"strip", ws.value > 0.0 && wr.value >= 1.0 - kResolveSlack, ws.value,
         point_at_level(u, pts[ws.index], plan.strip_levels[samples[ws.index].strip_level] * delta),
         delta});

    const auto wf = detail::arg_min(neg_flat);
    rep.records.push_back(
        {"flatness", wf.value == 0.0, -wf.value,
         point_at_level(u, pts[wf.index], plan.flat_levels[samples[wf.index].flat_level] * delta),
         delta});

    const auto wl = detail::arg_min(neg_lambda);
    const double bound_margin = 1.0 + wl.value / c_prime;
    rep.records.push_back(
        {"uniform_bound", bound_margin >= 0.0, bound_margin,
         point_at_level(u, pts[wl.index],
                        plan.domain_levels[samples[wl.index].lambda_level] * delta),
         delta});
  }

  const double spread = detail::relative_spread(rep.strip_constants);
  rep.records.push_back({"strip_stability", spread < kStripStabilityTolerance, spread,
                         std::nullopt, std::nullopt});
  rep.strip_constant_measured =
      *std::min_element(rep.strip_constants.begin(), rep.strip_constants.end());
  rep.strip_constant_theory = w.hinge.d1(std::exp(-1.0)) * std::exp(-3.0) * w.C /
                              (1.0 + 2.0 * max_grad2);
  return rep;
}

/// Worst relative disagreement max|H - H_fd| / (1 + max|H|) between the
/// analytic Hessian of lambda_delta and a Richardson-extrapolated
/// finite-difference Hessian, at seeded points near the strip.
inline CheckRecord check_fd_spot(const MixedTerm &u, const WeightFamily &w, const SamplePlan &plan,
                                 int count = 8, double delta = 1e-2) {
  std::mt19937_64 rng(plan.seed ^ 0x9e3779b97f4a7c15ull);
  double worst = 0.0;
  AmbientPoint witness;
  const auto n = u.dimension();
  double tau_min = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    tau_min = std::min(tau_min, w.tau_at(i, delta));
  const double h = 1e-3 * std::min(delta, tau_min);
  const AmbientField field = [&](const AmbientPoint &q) { return lambda_value(u, w, q, delta); };
  for (int k = 0; k < count; ++k) {
    Point z(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double s = 1.5 * detail::unit_uniform(rng);
      const double theta = 2.0 * std::numbers::pi * detail::unit_uniform(rng);
      z[i] = detail::polar(std::min(plan.radius, s * w.tau_at(i, delta)), theta);
    }
    const double level = -1.5 + 2.4 * detail::unit_uniform(rng);
    const auto p = point_at_level(u, z, level * delta);
    const auto analytic = lambda_hessian(u, w, p, delta);
    const auto fd = fd_hessian(field, p, h, true);
    const double err = (analytic - fd).max_norm() / (1.0 + analytic.max_norm());
    if (err > worst || std::isnan(err)) {
      worst = err;
      witness = p;
    }
  }
  return {"fd_spot_check", worst <= kFdTolerance, worst, witness, delta};
}

} // namespace levicert

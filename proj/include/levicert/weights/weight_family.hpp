#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "../core/hermitian_form.hpp"
#include "../core/monomial.hpp"
#include "../errors.hpp"
#include "../rational.hpp"
#include "cutoff.hpp"
#include "hinge.hpp"

namespace levicert {

inline Cutoff build_cutoff() { return Cutoff(); }

inline void check_delta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw InvalidInput("delta must lie in (0, 1], got " + std::to_string(delta));
}

/// tau_i(delta) = delta^{1/(2 m_i)}.
inline double tau(double delta, std::uint32_t m) {
  check_delta(delta);
  if (m == 0)
    throw InvalidInput("pure power must be >= 1");
  return std::pow(delta, 1.0 / (2.0 * m));
}

/// The weight family for the diagonal model sum_i kappa_i |z_i|^{2 m_i}.
///
/// rho_delta(z) = c sum_i chi(|z_i|^2 / tau_i^2), and with the constants
///   c = min(kappa_min 2^{-max m} / M, 1/n),
///   d = min_i (kappa_i 2^{1 - m_i} - c M),
///   C = min(kappa_min, c, d),
/// the resolve form (Levi(model)/delta + Hess rho_delta) is bounded below by
/// C delta^{-1/m_i} in coordinate i. kappa_i = 1 for the unit-coefficient model.
struct WeightFamily {
  std::vector<std::uint32_t> pure_powers;
  std::vector<double> levi_scale; // kappa_i in (0, 1]
  Cutoff cutoff;
  Hinge hinge;
  double c = 0.0;
  double d = 0.0;
  double C = 0.0;
  Rational epsilon;

  std::size_t dimension() const noexcept { return pure_powers.size(); }
  std::uint32_t max_power() const {
    return *std::max_element(pure_powers.begin(), pure_powers.end());
  }

  double tau_at(std::size_t i, double delta) const { return tau(delta, pure_powers.at(i)); }

  /// delta^{-2 epsilon}, computed as exp(-2 epsilon ln delta).
  double required_scale(double delta) const {
    check_delta(delta);
    return std::exp(-2.0 * to_double(epsilon) * std::log(delta));
  }

  /// Diagonal entry of the resolve form at |z_i| = s tau_i, times delta^{1/m_i}.
  /// Independent of delta:  kappa m^2 s^{2m-2} + c chi'(s^2) + c chi''(s^2) s^2.
  double scaled_entry(std::size_t i, double s) const {
    const auto m = pure_powers.at(i);
    const double t = s * s;
    return levi_scale.at(i) * m * m * std::pow(s, 2.0 * m - 2.0) + c * cutoff.d1(t) +
           c * cutoff.d2(t) * t;
  }

  /// Same with the lower-bound first term |z_i|^{2m_i - 2}/delta (no m^2, no kappa).
  double scaled_entry_literal(std::size_t i, double s) const {
    const auto m = pure_powers.at(i);
    const double t = s * s;
    return std::pow(s, 2.0 * m - 2.0) + c * cutoff.d1(t) + c * cutoff.d2(t) * t;
  }

  /// argmin over s in [0, 1] of scaled_entry(i, s); beyond s = 1 the entry is
  /// kappa m^2 s^{2m-2} >= kappa and increasing.
  double critical_scaled_radius(std::size_t i) const {
    constexpr int kGrid = 4096;
    int best = 0;
    double best_value = scaled_entry(i, 0.0);
    for (int k = 1; k <= kGrid; ++k) {
      const double v = scaled_entry(i, static_cast<double>(k) / kGrid);
      if (v < best_value) {
        best_value = v;
        best = k;
      }
    }
    double lo = std::max(0, best - 1) / static_cast<double>(kGrid);
    double hi = std::min(kGrid, best + 1) / static_cast<double>(kGrid);
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double a = hi - golden * (hi - lo);
      const double b = lo + golden * (hi - lo);
      if (scaled_entry(i, a) <= scaled_entry(i, b))
        hi = b;
      else
        lo = a;
    }
    const double s = 0.5 * (lo + hi);
    return scaled_entry(i, s) <= best_value ? s : best / static_cast<double>(kGrid);
  }
};

/// Constants for pure powers m (and optional per-coordinate Levi scales kappa).
inline WeightFamily choose_constants(const std::vector<std::uint32_t> &m, const Cutoff &cutoff,
                                     std::size_t n, std::vector<double> kappa = {}) {
  if (m.empty() || m.size() != n)
    throw InvalidInput("need one pure power per coordinate");
  for (auto mi : m)
    if (mi == 0)
      throw InvalidInput("pure powers must be >= 1");
  if (kappa.empty())
    kappa.assign(n, 1.0);
  if (kappa.size() != n)
    throw InvalidInput("need one Levi scale per coordinate");
  for (auto &k : kappa) {
    if (!(k > 0.0) || !std::isfinite(k))
      throw InvalidInput("Levi scales must be positive and finite");
    k = std::min(k, 1.0);
  }

  WeightFamily w;
  w.pure_powers = m;
  w.levi_scale = kappa;
  w.cutoff = cutoff;
  const double M = cutoff.derivative_bound();
  const auto max_m = *std::max_element(m.begin(), m.end());
  const double kappa_min = *std::min_element(kappa.begin(), kappa.end());

  w.c = std::min(kappa_min * std::ldexp(1.0, -static_cast<int>(max_m)) / M,
                 1.0 / static_cast<double>(n));
  w.d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    w.d = std::min(w.d, kappa[i] * std::ldexp(1.0, 1 - static_cast<int>(m[i])) - w.c * M);
  if (!(w.d > 0.0))
    throw NumericFailure("middle-regime constant d is not positive");
  w.C = std::min({kappa_min, w.c, w.d});
  w.epsilon = Rational(1, 2 * static_cast<std::int64_t>(max_m));
  return w;
}

/// sum_i sqrt(kappa_i) z_i^{m_i}: the model whose Levi form the weights resolve.
inline MixedTerm diagonal_model(const WeightFamily &w) {
  const auto n = w.dimension();
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = w.pure_powers[i];
    gens.emplace_back(Complex(std::sqrt(w.levi_scale[i]), 0.0), ExponentVector(std::move(e)));
  }
  return MixedTerm(n, std::move(gens));
}

inline void check_weight_dimension(const WeightFamily &w, std::span<const Complex> z) {
  if (z.size() != w.dimension())
    throw InvalidInput("point dimension does not match weight family");
}

inline double rho_delta(const WeightFamily &w, std::span<const Complex> z, double delta) {
  check_delta(delta);
  check_weight_dimension(w, z);
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double tau_i = w.tau_at(i, delta);
    s += w.cutoff(std::norm(z[i]) / (tau_i * tau_i));
  }
  return w.c * s;
}

/// d rho / d z_i = c chi'(t_i) conj(z_i) / tau_i^2.
inline std::vector<Complex> rho_gradient(const WeightFamily &w, std::span<const Complex> z,
                                         double delta) {
  check_delta(delta);
  check_weight_dimension(w, z);
  std::vector<Complex> g(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double tau_i = w.tau_at(i, delta);
    const double tau2 = tau_i * tau_i;
    g[i] = w.c * w.cutoff.d1(std::norm(z[i]) / tau2) * std::conj(z[i]) / tau2;
  }
  return g;
}

/// Diagonal: c chi'(t_i)/tau_i^2 + c chi''(t_i) |z_i|^2 / tau_i^4, t_i = |z_i|^2/tau_i^2.
inline HermitianForm rho_hessian(const WeightFamily &w, std::span<const Complex> z, double delta) {
  check_delta(delta);
  check_weight_dimension(w, z);
  HermitianForm h(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double tau_i = w.tau_at(i, delta);
    const double tau2 = tau_i * tau_i;
    const double r2 = std::norm(z[i]);
    const double t = r2 / tau2;
    h.set(i, i, w.c * w.cutoff.d1(t) / tau2 + w.c * w.cutoff.d2(t) * r2 / (tau2 * tau2));
  }
  return h;
}

/// Levi(u)/delta + Hess rho_delta.
inline HermitianForm resolve_hessian(const MixedTerm &u, const WeightFamily &w,
                                     std::span<const Complex> z, double delta) {
  auto h = levi_form(u, z);
  h *= 1.0 / delta;
  h += rho_hessian(w, z, delta);
  return h;
}

inline constexpr double kExpSaturation = -700.0;

/// e^{r/delta}, saturated to exactly 0 for r/delta < -700.
inline double boundary_exponential(double r, double delta) {
  const double x = r / delta;
  return x < kExpSaturation ? 0.0 : std::exp(x);
}

/// lambda~ = e^{r/delta} + e^{-3} rho_delta.
inline double lambda_tilde(const MixedTerm &u, const WeightFamily &w, const AmbientPoint &p,
                           double delta) {
  check_delta(delta);
  return boundary_exponential(defining_function(u, p), delta) +
         std::exp(-3.0) * rho_delta(w, p.z, delta);
}

/// Holomorphic gradient of lambda~ in C^{n+1}.
inline std::vector<Complex> lambda_tilde_gradient(const MixedTerm &u, const WeightFamily &w,
                                                  const AmbientPoint &p, double delta) {
  check_delta(delta);
  const double e = boundary_exponential(defining_function(u, p), delta);
  auto g = ambient_holomorphic_gradient(u, p);
  const auto grho = rho_gradient(w, p.z, delta);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] *= e / delta;
    if (i < grho.size())
      g[i] += std::exp(-3.0) * grho[i];
  }
  return g;
}

/// e^{r/delta} (w w^* / delta^2 + (Levi(u) + 0) / delta) + e^{-3} (Hess rho + 0),
/// with w the ambient gradient of r.
inline HermitianForm lambda_tilde_hessian(const MixedTerm &u, const WeightFamily &w,
                                          const AmbientPoint &p, double delta) {
  check_delta(delta);
  const double e = boundary_exponential(defining_function(u, p), delta);
  HermitianForm h(u.dimension() + 1);
  if (e != 0.0) {
    h.add_rank_one(e / (delta * delta), ambient_holomorphic_gradient(u, p));
    h += (e / delta) * levi_form(u, p.z).padded(1);
  }
  h += std::exp(-3.0) * rho_hessian(w, p.z, delta).padded(1);
  return h;
}

/// lambda_delta = p(lambda~).
inline double lambda_value(const MixedTerm &u, const WeightFamily &w, const AmbientPoint &p,
                           double delta) {
  return w.hinge(lambda_tilde(u, w, p, delta));
}

/// p''(lambda~) g g^* + p'(lambda~) Hess lambda~; exactly zero where lambda~ <= e^{-2}.
inline HermitianForm lambda_hessian(const MixedTerm &u, const WeightFamily &w,
                                    const AmbientPoint &p, double delta) {
  const double lt = lambda_tilde(u, w, p, delta);
  const double dp = w.hinge.d1(lt);
  const double ddp = w.hinge.d2(lt);
  HermitianForm h(u.dimension() + 1);
  if (dp == 0.0 && ddp == 0.0)
    return h;
  h.add_rank_one(ddp, lambda_tilde_gradient(u, w, p, delta));
  h += dp * lambda_tilde_hessian(u, w, p, delta);
  return h;
}

} // namespace levicert

#pragma once

// Hand-rolled generators for the property tests. Every generator takes the
// RNG by reference so a test's cases are reproducible from its seed.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "levicert.hpp"

namespace testsupport {

using levicert::Complex;
using levicert::ExponentVector;
using levicert::MixedTerm;
using levicert::Monomial;

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Complex random_coefficient(std::mt19937_64 &rng) {
  const double r = uniform(rng, 0.25, 2.0);
  const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return std::polar(r, theta);
}

inline std::vector<Complex> random_point(std::mt19937_64 &rng, std::size_t n, double radius) {
  std::vector<Complex> z(n);
  for (auto &x : z)
    x = std::polar(uniform(rng, 0.0, radius), uniform(rng, 0.0, 2.0 * std::numbers::pi));
  return z;
}

/// Random nonconstant exponent vector with entries in [0, max_exp].
inline ExponentVector random_exponents(std::mt19937_64 &rng, std::size_t n, int max_exp) {
  for (;;) {
    std::vector<std::uint32_t> e(n);
    for (auto &x : e)
      x = static_cast<std::uint32_t>(uniform_int(rng, 0, max_exp));
    ExponentVector ev(std::move(e));
    if (!ev.is_zero())
      return ev;
  }
}

/// Finite-type mixed term: one pure power per coordinate plus a few mixed
/// generators, coefficients random unless `unit` is set.
inline MixedTerm random_finite_type(std::mt19937_64 &rng, std::size_t n, int max_exp,
                                    bool unit = false) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = static_cast<std::uint32_t>(uniform_int(rng, 1, max_exp));
    gens.emplace_back(unit ? Complex(1.0, 0.0) : random_coefficient(rng), ExponentVector(e));
  }
  const int extra = uniform_int(rng, 0, 3);
  for (int k = 0; k < extra; ++k)
    gens.emplace_back(unit ? Complex(1.0, 0.0) : random_coefficient(rng),
                      random_exponents(rng, n, max_exp));
  return MixedTerm(n, std::move(gens));
}

inline MixedTerm mixed(std::vector<std::vector<std::uint32_t>> exps) {
  std::vector<ExponentVector> ev;
  for (auto &e : exps)
    ev.emplace_back(std::move(e));
  return MixedTerm::from_exponents(std::move(ev));
}

/// A plan small enough for unit tests.
inline levicert::SamplePlan small_plan() {
  levicert::SamplePlan plan;
  plan.radial_points = 16;
  plan.phase_points = 3;
  plan.random_points = 8;
  plan.deltas = {1e-2, 1e-4, 1e-6};
  return plan;
}

} // namespace testsupport

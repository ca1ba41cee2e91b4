#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "../core/hermitian_form.hpp"
#include "../errors.hpp"

namespace levicert {

inline constexpr int kMaxJacobiSweeps = 100;

namespace detail {

// Row-major real symmetric matrix [[A, -B], [B, A]] for H = A + iB. Its
// spectrum is the spectrum of H with every eigenvalue doubled.
inline std::vector<double> real_embedding(const HermitianForm &h) {
  const auto n = h.dim();
  const auto m = 2 * n;
  std::vector<double> a(m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = h(i, k);
      a[i * m + k] = v.real();
      a[(i + n) * m + (k + n)] = v.real();
      a[i * m + (k + n)] = -v.imag();
      a[(i + n) * m + k] = v.imag();
    }
  return a;
}

/// Cyclic Jacobi. An off-diagonal entry is annihilated whenever
/// |a_pq| > tol * sqrt(|a_pp a_qq|); this relative threshold keeps small
/// eigenvalues of graded positive definite matrices accurate to working
/// precision even when the norm is many orders larger.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t m) {
  constexpr double kRelTol = 1e-15;
  constexpr double kTiny = 1e-300;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = a[p * m + q];
        const double app = a[p * m + p];
        const double aqq = a[q * m + q];
        if (std::abs(apq) <= kTiny || std::abs(apq) <= kRelTol * std::sqrt(std::abs(app * aqq)))
          continue;
        rotated = true;
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < m; ++r) {
          if (r == p || r == q)
            continue;
          const double arp = a[r * m + p];
          const double arq = a[r * m + q];
          a[r * m + p] = a[p * m + r] = c * arp - s * arq;
          a[r * m + q] = a[q * m + r] = s * arp + c * arq;
        }
        a[p * m + p] = app - t * apq;
        a[q * m + q] = aqq + t * apq;
        a[p * m + q] = a[q * m + p] = 0.0;
      }
    }
    if (!rotated) {
      std::vector<double> ev(m);
      for (std::size_t i = 0; i < m; ++i)
        ev[i] = a[i * m + i];
      return ev;
    }
  }
  throw NumericFailure("Jacobi eigensolver did not converge within " +
                       std::to_string(kMaxJacobiSweeps) + " sweeps");
}

} // namespace detail

/// All eigenvalues of H, ascending.
inline std::vector<double> hermitian_eigenvalues(const HermitianForm &h) {
  const auto n = h.dim();
  if (n == 0)
    return {};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!std::isfinite(h(i, k).real()) || !std::isfinite(h(i, k).imag()))
        throw NumericFailure("non-finite entry in Hermitian form");
  auto doubled = detail::jacobi_eigenvalues(detail::real_embedding(h), 2 * n);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i)
    ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return ev;
}

inline double hermitian_min_eigenvalue(const HermitianForm &h) {
  if (h.dim() == 0)
    throw InvalidInput("empty Hermitian form");
  if (h.dim() == 1)
    return h(0, 0).real();
  return hermitian_eigenvalues(h).front();
}

} // namespace levicert

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "../core/hermitian_form.hpp"
#include "../core/monomial.hpp"
#include "../errors.hpp"

namespace levicert {

using AmbientField = std::function<double(const AmbientPoint &)>;

namespace detail {

// Real coordinate 2j is Re of complex coordinate j, 2j+1 is Im; index n is z_last.
inline AmbientPoint shifted(const AmbientPoint &p, std::size_t a, double ha, std::size_t b,
                            double hb) {
  AmbientPoint q = p;
  auto bump = [&q](std::size_t idx, double h) {
    const auto j = idx / 2;
    Complex &c = j < q.z.size() ? q.z[j] : q.z_last;
    c += (idx % 2 == 0) ? Complex(h, 0.0) : Complex(0.0, h);
  };
  bump(a, ha);
  bump(b, hb);
  return q;
}

inline std::vector<double> real_hessian(const AmbientField &f, const AmbientPoint &p, double h) {
  const auto m = 2 * (p.z.size() + 1);
  std::vector<double> hr(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const double v = (f(shifted(p, a, h, b, h)) - f(shifted(p, a, h, b, -h)) -
                        f(shifted(p, a, -h, b, h)) + f(shifted(p, a, -h, b, -h))) /
                       (4.0 * h * h);
      hr[a * m + b] = hr[b * m + a] = v;
    }
  return hr;
}

} // namespace detail

/// d^2 f / dz_i dzbar_k = (f_{x_i x_k} + f_{y_i y_k} + i (f_{x_i y_k} - f_{y_i x_k})) / 4
/// over the n+1 ambient coordinates, each real second derivative from the
/// 4-point central stencil. With `richardson`, the h and h/2 results are
/// combined to cancel the O(h^2) term.
inline HermitianForm fd_hessian(const AmbientField &field, const AmbientPoint &p, double h,
                                bool richardson = false) {
  if (!(h > 0.0))
    throw InvalidInput("finite-difference step must be positive");
  auto hr = detail::real_hessian(field, p, h);
  if (richardson) {
    const auto half = detail::real_hessian(field, p, 0.5 * h);
    for (std::size_t k = 0; k < hr.size(); ++k)
      hr[k] = (4.0 * half[k] - hr[k]) / 3.0;
  }
  const auto n1 = p.z.size() + 1;
  const auto m = 2 * n1;
  HermitianForm out(n1);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t k = i; k < n1; ++k) {
      const double xx = hr[(2 * i) * m + 2 * k];
      const double yy = hr[(2 * i + 1) * m + 2 * k + 1];
      const double xy = hr[(2 * i) * m + 2 * k + 1];
      const double yx = hr[(2 * i + 1) * m + 2 * k];
      out.set(i, k, Complex(xx + yy, xy - yx) / 4.0);
    }
  return out;
}

/// Leading n x n block of a form (drops the z_last row/column).
inline HermitianForm leading_block(const HermitianForm &h, std::size_t n) {
  HermitianForm out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k)
      out.set(i, k, h(i, k));
  return out;
}

/// max |A - B| <= tol * (1 + max|A|).
inline bool forms_agree(const HermitianForm &analytic, const HermitianForm &reference, double tol) {
  return (analytic - reference).max_norm() <= tol * (1.0 + analytic.max_norm());
}

} // namespace levicert

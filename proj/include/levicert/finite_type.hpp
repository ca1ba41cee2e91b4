#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "core/monomial.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace levicert {

// Everything here depends only on the exponent vectors of the generators.

struct TypeReport {
  std::vector<std::uint32_t> pure_powers; // m_i
  std::int64_t one_type = 0;              // T = 2 max m_i
  std::int64_t multiplicity = 0;          // m(I) = dim O_n / I
  Rational epsilon;                       // 1 / T
  Rational lower_bound;                   // 1 / (2 m(I))
  Rational upper_bound;                   // 1 / T

  bool operator==(const TypeReport &) const = default;
};

/// Curve t -> (t^{a_i} on the support, 0 elsewhere), last ambient coordinate 0.
struct MonomialCurve {
  std::vector<std::size_t> support;   // strictly increasing coordinate indices
  std::vector<std::uint32_t> powers;  // a_i >= 1, parallel to support

  MonomialCurve(std::vector<std::size_t> s, std::vector<std::uint32_t> a)
      : support(std::move(s)), powers(std::move(a)) {
    if (support.empty() || support.size() != powers.size())
      throw InvalidInput("monomial curve needs a nonempty support with one power per coordinate");
    for (auto a_i : powers)
      if (a_i == 0)
        throw InvalidInput("monomial curve powers must be >= 1");
    if (!std::is_sorted(support.begin(), support.end()) ||
        std::adjacent_find(support.begin(), support.end()) != support.end())
      throw InvalidInput("monomial curve support must be strictly increasing");
  }
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// m_i = least k such that some generator is (a multiple of) z_i^k.
/// Throws NotFiniteType for the first coordinate lacking a pure power.
inline std::vector<std::uint32_t> minimal_pure_powers(const MixedTerm &u) {
  const auto n = u.dimension();
  std::vector<std::uint32_t> m(n, 0);
  for (const auto &g : u.generators()) {
    const auto i = g.exponents().pure_power_coordinate();
    if (!i)
      continue;
    const auto k = g.exponents()[*i];
    if (m[*i] == 0 || k < m[*i])
      m[*i] = k;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (m[i] == 0)
      throw NotFiniteType(i);
  return m;
}

inline std::int64_t dangelo_type(const MixedTerm &u) {
  const auto m = minimal_pure_powers(u);
  return 2 * static_cast<std::int64_t>(*std::max_element(m.begin(), m.end()));
}

/// Number of standard monomials: beta in prod [0, m_i) divisible by no generator.
inline std::int64_t multiplicity(const MixedTerm &u,
                                 std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto m = minimal_pure_powers(u);
  const auto n = m.size();

  std::uint64_t box = 1;
  for (auto mi : m) {
    if (box > budget / mi)
      throw EnumerationBudgetExceeded("staircase box exceeds enumeration budget of " +
                                      std::to_string(budget) + " lattice points");
    box *= mi;
  }

  // Only generators that fit inside the box can remove points from it.
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto &g : u.generators()) {
    const auto e = g.exponents().entries();
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i)
      inside = e[i] < m[i];
    if (inside)
      gens.emplace_back(e.begin(), e.end());
  }

  std::vector<std::uint32_t> beta(n, 0);
  std::int64_t count = 0;
  for (std::uint64_t step = 0; step < box; ++step) {
    bool standard = true;
    for (const auto &a : gens) {
      bool divides = true;
      for (std::size_t i = 0; i < n && divides; ++i)
        divides = a[i] <= beta[i];
      if (divides) {
        standard = false;
        break;
      }
    }
    count += standard;
    for (std::size_t i = 0; i < n; ++i) {
      if (++beta[i] < m[i])
        break;
      beta[i] = 0;
    }
  }
  return count;
}

/// v(z^* r) / v(z) along a monomial curve; std::nullopt means the ratio is
/// infinite (u vanishes identically on the curve).
///
/// Along the curve each |f_j|^2 becomes |c_j|^2 |t|^{2<alpha_j, a>} when
/// supp(alpha_j) lies in the support and vanishes otherwise. All surviving
/// terms are positive, so the vanishing order of r is the minimum exponent.
inline std::optional<Rational> curve_vanishing_ratio(const MixedTerm &u, const MonomialCurve &c) {
  const auto n = u.dimension();
  for (auto i : c.support)
    if (i >= n)
      throw InvalidInput("curve coordinate out of range");

  std::vector<std::uint32_t> a(n, 0);
  for (std::size_t k = 0; k < c.support.size(); ++k)
    a[c.support[k]] = c.powers[k];

  std::optional<std::int64_t> order;
  for (const auto &g : u.generators()) {
    const auto e = g.exponents().entries();
    std::int64_t dot = 0;
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) {
      if (e[i] == 0)
        continue;
      inside = a[i] != 0;
      dot += static_cast<std::int64_t>(e[i]) * a[i];
    }
    if (inside && (!order || dot < *order))
      order = dot;
  }
  if (!order)
    return std::nullopt;
  const auto curve_order = *std::min_element(c.powers.begin(), c.powers.end());
  return Rational(2 * *order, curve_order);
}

/// Maximum finite curve ratio over every nonempty support and every power
/// tuple in [1, A]^|support|. Returns 0 if every probed ratio is infinite.
inline Rational probe_type(const MixedTerm &u, std::uint32_t exponent_bound) {
  if (exponent_bound < 1)
    throw InvalidInput("probe exponent bound must be >= 1");
  const auto n = u.dimension();
  if (n >= 63)
    throw InvalidInput("probe_type supports n < 63");

  Rational best(0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i))
        support.push_back(i);
    std::vector<std::uint32_t> powers(support.size(), 1);
    while (true) {
      if (auto q = curve_vanishing_ratio(u, MonomialCurve(support, powers)); q && *q > best)
        best = *q;
      std::size_t k = 0;
      while (k < powers.size() && powers[k] == exponent_bound)
        powers[k++] = 1;
      if (k == powers.size())
        break;
      ++powers[k];
    }
  }
  return best;
}

/// Assembles the TypeReport and the bound 1/(2 m(I)) <= epsilon <= 1/T.
inline TypeReport conjecture_bounds(const MixedTerm &u,
                                    std::uint64_t budget = kDefaultEnumerationBudget) {
  TypeReport r;
  r.pure_powers = minimal_pure_powers(u);
  r.one_type = dangelo_type(u);
  r.multiplicity = multiplicity(u, budget);
  r.epsilon = Rational(1, r.one_type);
  r.lower_bound = Rational(1, 2 * r.multiplicity);
  r.upper_bound = Rational(1, r.one_type);
  if (!(r.lower_bound <= r.epsilon && r.epsilon <= r.upper_bound))
    throw NumericFailure("type bounds out of order; staircase count is inconsistent");
  return r;
}

} // namespace levicert

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "../errors.hpp"
#include "hermitian_form.hpp"

namespace levicert {

/// Exponents are capped so that weighted degrees <alpha, a> stay far from
/// int64 overflow for any probe curve we enumerate.
inline constexpr std::uint32_t kMaxExponent = 1u << 16;

class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    validate();
  }
  ExponentVector(std::initializer_list<std::uint32_t> entries) : entries_(entries) { validate(); }

  std::size_t size() const noexcept { return entries_.size(); }
  std::uint32_t operator[](std::size_t i) const { return entries_.at(i); }
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto e : entries_)
      d += e;
    return d;
  }

  bool is_zero() const { return total_degree() == 0; }

  /// Number of coordinates with a nonzero exponent.
  std::size_t support_size() const {
    std::size_t s = 0;
    for (auto e : entries_)
      s += e != 0;
    return s;
  }

  /// Index of the single nonzero coordinate if this is a pure power z_i^k.
  std::optional<std::size_t> pure_power_coordinate() const {
    if (support_size() != 1)
      return std::nullopt;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] != 0)
        return i;
    return std::nullopt;
  }

  /// Componentwise this <= other (divisibility of monomials).
  bool divides(const ExponentVector &other) const {
    if (other.size() != size())
      return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] > other.entries_[i])
        return false;
    return true;
  }

  ExponentVector decremented(std::size_t i) const {
    auto copy = entries_;
    --copy.at(i);
    return ExponentVector(std::move(copy));
  }

  auto operator<=>(const ExponentVector &) const = default;

private:
  void validate() const {
    if (entries_.empty())
      throw InvalidInput("exponent vector must have dimension >= 1");
    for (auto e : entries_)
      if (e > kMaxExponent)
        throw InvalidInput("exponent " + std::to_string(e) + " exceeds limit " +
                           std::to_string(kMaxExponent));
  }

  std::vector<std::uint32_t> entries_;
};

namespace detail {

/// z^k by iterated multiplication up to k = 64, square-and-multiply above.
inline Complex ipow(Complex z, std::uint32_t k) {
  if (k <= 64) {
    Complex r(1.0, 0.0);
    for (std::uint32_t j = 0; j < k; ++j)
      r *= z;
    return r;
  }
  Complex r(1.0, 0.0);
  while (k) {
    if (k & 1u)
      r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

inline Complex monomial_value(const ExponentVector &alpha, std::span<const Complex> z) {
  Complex v(1.0, 0.0);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0)
      v *= ipow(z[i], alpha[i]);
  return v;
}

} // namespace detail

/// c * z^alpha with c != 0.
class Monomial {
public:
  Monomial(Complex coefficient, ExponentVector exponents)
      : coefficient_(coefficient), exponents_(std::move(exponents)) {
    if (coefficient_ == Complex(0.0, 0.0))
      throw InvalidInput("monomial coefficient must be nonzero");
    if (!std::isfinite(coefficient_.real()) || !std::isfinite(coefficient_.imag()))
      throw InvalidInput("monomial coefficient must be finite");
  }

  const Complex &coefficient() const noexcept { return coefficient_; }
  const ExponentVector &exponents() const noexcept { return exponents_; }
  std::size_t dimension() const noexcept { return exponents_.size(); }

  /// |c|^2, the only way the coefficient enters u = sum |f_j|^2.
  double weight() const { return std::norm(coefficient_); }

  Complex operator()(std::span<const Complex> z) const {
    return coefficient_ * detail::monomial_value(exponents_, z);
  }

private:
  Complex coefficient_;
  ExponentVector exponents_;
};

/// d f / d z_i; std::nullopt stands for the zero function (f independent of z_i).
inline std::optional<Monomial> wirtinger_derivative(const Monomial &f, std::size_t i) {
  if (i >= f.dimension())
    throw InvalidInput("coordinate index " + std::to_string(i) + " out of range for dimension " +
                       std::to_string(f.dimension()));
  const auto e = f.exponents()[i];
  if (e == 0)
    return std::nullopt;
  return Monomial(f.coefficient() * static_cast<double>(e), f.exponents().decremented(i));
}

/// u = sum_j |f_j|^2 for monomials f_j, with u(0) = 0.
class MixedTerm {
public:
  MixedTerm(std::size_t dimension, std::vector<Monomial> generators)
      : dimension_(dimension), generators_(std::move(generators)) {
    if (dimension_ == 0)
      throw InvalidInput("dimension must be >= 1");
    if (generators_.empty())
      throw InvalidInput("mixed term needs at least one generator");
    for (const auto &g : generators_) {
      if (g.dimension() != dimension_)
        throw InvalidInput("generator dimension " + std::to_string(g.dimension()) +
                           " does not match n = " + std::to_string(dimension_));
      if (g.exponents().is_zero())
        throw InvalidInput("constant generator violates u(0) = 0");
    }
  }

  /// Convenience: unit-coefficient generators from exponent vectors.
  static MixedTerm from_exponents(std::vector<ExponentVector> exps) {
    if (exps.empty())
      throw InvalidInput("mixed term needs at least one generator");
    const auto n = exps.front().size();
    std::vector<Monomial> gens;
    gens.reserve(exps.size());
    for (auto &e : exps)
      gens.emplace_back(Complex(1.0, 0.0), std::move(e));
    return MixedTerm(n, std::move(gens));
  }

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Monomial> &generators() const noexcept { return generators_; }

  MixedTerm with_generator(Monomial g) const {
    auto gens = generators_;
    gens.push_back(std::move(g));
    return MixedTerm(dimension_, std::move(gens));
  }

private:
  std::size_t dimension_;
  std::vector<Monomial> generators_;
};

/// Point z' = (z, z_{n+1}) of C^{n+1}.
struct AmbientPoint {
  std::vector<Complex> z;
  Complex z_last{0.0, 0.0};

  bool operator==(const AmbientPoint &) const = default;
};

inline void check_dimension(const MixedTerm &u, std::span<const Complex> z) {
  if (z.size() != u.dimension())
    throw InvalidInput("point has " + std::to_string(z.size()) + " coordinates, expected " +
                       std::to_string(u.dimension()));
}

inline double eval_mixed(const MixedTerm &u, std::span<const Complex> z) {
  check_dimension(u, z);
  double s = 0.0;
  for (const auto &f : u.generators())
    s += f.weight() * std::norm(detail::monomial_value(f.exponents(), z));
  return s;
}

/// Coefficient-free derivative vector (d/dz_1 z^alpha, ..., d/dz_n z^alpha).
namespace detail {
inline std::vector<Complex> monomial_gradient(const ExponentVector &alpha,
                                              std::span<const Complex> z) {
  std::vector<Complex> g(alpha.size(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0)
      continue;
    g[i] = static_cast<double>(alpha[i]) * monomial_value(alpha.decremented(i), z);
  }
  return g;
}
} // namespace detail

/// Complex Hessian d^2 u / dz_i dzbar_k = sum_j |c_j|^2 (d_i z^a_j) conj(d_k z^a_j).
/// A Gram sum, hence positive semidefinite.
inline HermitianForm levi_form(const MixedTerm &u, std::span<const Complex> z) {
  check_dimension(u, z);
  HermitianForm h(u.dimension());
  for (const auto &f : u.generators())
    h.add_rank_one(f.weight(), detail::monomial_gradient(f.exponents(), z));
  return h;
}

/// (du/dz_1, ..., du/dz_n) = sum_j |c_j|^2 (d z^a_j) conj(z^a_j).
inline std::vector<Complex> mixed_gradient(const MixedTerm &u, std::span<const Complex> z) {
  check_dimension(u, z);
  std::vector<Complex> g(u.dimension(), Complex(0.0, 0.0));
  for (const auto &f : u.generators()) {
    const auto conj_value = std::conj(detail::monomial_value(f.exponents(), z));
    const auto d = detail::monomial_gradient(f.exponents(), z);
    for (std::size_t i = 0; i < g.size(); ++i)
      g[i] += f.weight() * d[i] * conj_value;
  }
  return g;
}

/// r(z') = 2 Re z_{n+1} + u(z).
inline double defining_function(const MixedTerm &u, const AmbientPoint &p) {
  return 2.0 * p.z_last.real() + eval_mixed(u, p.z);
}

/// (dr/dz_1, ..., dr/dz_{n+1}); the last component is exactly 1.
inline std::vector<Complex> ambient_holomorphic_gradient(const MixedTerm &u,
                                                         const AmbientPoint &p) {
  auto w = mixed_gradient(u, p.z);
  w.emplace_back(1.0, 0.0);
  return w;
}

/// Point with prescribed z, Im z_{n+1} = 0, and r(z') = r_target.
inline AmbientPoint point_at_level(const MixedTerm &u, std::vector<Complex> z, double r_target) {
  const double uz = eval_mixed(u, z);
  return AmbientPoint{std::move(z), Complex((r_target - uz) / 2.0, 0.0)};
}

} // namespace levicert

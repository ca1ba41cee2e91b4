#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace levicert {

using Complex = std::complex<double>;

/// Dense complex Hermitian matrix. Only the upper triangle is ever written;
/// `set` mirrors the conjugate into the lower triangle, so entry(i,k) ==
/// conj(entry(k,i)) holds bit-exactly and diagonal entries are real.
class HermitianForm {
public:
  HermitianForm() = default;
  explicit HermitianForm(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static HermitianForm diagonal(const std::vector<double> &diag) {
    HermitianForm h(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
      h.set(i, i, diag[i]);
    return h;
  }

  std::size_t dim() const noexcept { return dim_; }

  Complex operator()(std::size_t i, std::size_t k) const {
    assert(i < dim_ && k < dim_);
    return entries_[i * dim_ + k];
  }

  /// Sets (i,k) and its mirror. For i == k only the real part is kept.
  void set(std::size_t i, std::size_t k, Complex v) {
    assert(i < dim_ && k < dim_);
    if (i == k) {
      entries_[i * dim_ + i] = Complex(v.real(), 0.0);
      return;
    }
    if (i > k) {
      std::swap(i, k);
      v = std::conj(v);
    }
    entries_[i * dim_ + k] = v;
    entries_[k * dim_ + i] = std::conj(v);
  }

  void add(std::size_t i, std::size_t k, Complex v) { set(i, k, (*this)(i, k) + v); }

  /// this += weight * g g^*, i.e. entry(i,k) += weight * g_i * conj(g_k).
  void add_rank_one(double weight, const std::vector<Complex> &g) {
    assert(g.size() == dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = i; k < dim_; ++k)
        add(i, k, weight * g[i] * std::conj(g[k]));
  }

  /// Embeds into dim()+extra dimensions, padding with zero rows/columns.
  HermitianForm padded(std::size_t extra) const {
    HermitianForm h(dim_ + extra);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = i; k < dim_; ++k)
        h.set(i, k, (*this)(i, k));
    return h;
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      t += entries_[i * dim_ + i].real();
    return t;
  }

  double max_norm() const {
    double m = 0.0;
    for (const auto &e : entries_)
      m = std::max(m, std::abs(e));
    return m;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Complex &e) { return e == Complex(0.0, 0.0); });
  }

  HermitianForm &operator+=(const HermitianForm &o) {
    assert(o.dim_ == dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = i; k < dim_; ++k)
        set(i, k, (*this)(i, k) + o(i, k));
    return *this;
  }
  HermitianForm &operator-=(const HermitianForm &o) {
    assert(o.dim_ == dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = i; k < dim_; ++k)
        set(i, k, (*this)(i, k) - o(i, k));
    return *this;
  }
  HermitianForm &operator*=(double s) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = i; k < dim_; ++k)
        set(i, k, s * (*this)(i, k));
    return *this;
  }

  friend HermitianForm operator+(HermitianForm a, const HermitianForm &b) { return a += b; }
  friend HermitianForm operator-(HermitianForm a, const HermitianForm &b) { return a -= b; }
  friend HermitianForm operator*(double s, HermitianForm a) { return a *= s; }

  bool operator==(const HermitianForm &) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

} // namespace levicert

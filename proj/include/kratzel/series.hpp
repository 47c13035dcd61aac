#pragma once

// Truncated formal power series c_0 + c_1 w + ... + c_N w^N and the operations
// needed to generate saddle-point expansion coefficients: ring arithmetic,
// powers, exp, composition and functional reversion.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "kratzel/errors.hpp"

namespace kratzel {

template <class T>
class TruncatedSeries {
 public:
  using value_type = T;

  // The zero series of order 0.
  TruncatedSeries() : c_(1, T{}) {}

  explicit TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(T{});
  }

  TruncatedSeries(std::initializer_list<T> coeffs) : TruncatedSeries(std::vector<T>(coeffs)) {}

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(std::vector<T>(order + 1, T{})); }

  static TruncatedSeries constant(T value, std::size_t order) {
    std::vector<T> c(order + 1, T{});
    c[0] = value;
    return TruncatedSeries(std::move(c));
  }

  // The series w itself.
  static TruncatedSeries variable(std::size_t order) {
    std::vector<T> c(order + 1, T{});
    if (order >= 1) c[1] = T{1};
    return TruncatedSeries(std::move(c));
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  std::span<const T> coeffs() const { return c_; }

  // Drop terms above `n`, or pad with zeros up to `n`.
  TruncatedSeries resized(std::size_t n) const {
    std::vector<T> c(c_);
    c.resize(n + 1, T{});
    return TruncatedSeries(std::move(c));
  }

  TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries();
    std::vector<T> c(order());
    for (std::size_t i = 1; i <= order(); ++i) c[i - 1] = T(double(i)) * c_[i];
    return TruncatedSeries(std::move(c));
  }

  T evaluate(T w) const {
    T acc = c_.back();
    for (std::size_t i = order(); i-- > 0;) acc = acc * w + c_[i];
    return acc;
  }

  TruncatedSeries operator-() const {
    std::vector<T> c(c_);
    for (auto& v : c) v = -v;
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a.c_[i] + b.c_[i];
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a.c_[i] - b.c_[i];
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1, T{});
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i] == T{}) continue;
      for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator*(T s, const TruncatedSeries& a) {
    std::vector<T> c(a.c_);
    for (auto& v : c) v *= s;
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, T s) { return s * a; }

 private:
  std::vector<T> c_;
};

enum class SeriesOp { add, sub, mul };

template <class T>
TruncatedSeries<T> series_arith(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add:
      return a + b;
    case SeriesOp::sub:
      return a - b;
    case SeriesOp::mul:
      return a * b;
  }
  return a * b;
}

/// a^alpha for a series with non-zero constant term, via the recurrence
///   n a_0 g_n = sum_{j=1}^n (alpha j - (n - j)) a_j g_{n-j},  g_0 = a_0^alpha.
template <class T>
TruncatedSeries<T> series_power(const TruncatedSeries<T>& a, T alpha) {
  if (std::abs(a[0]) == 0.0) throw ZeroConstantTerm("series_power: constant term is zero");
  const std::size_t n = a.order();
  std::vector<T> g(n + 1, T{});
  g[0] = std::pow(a[0], alpha);
  for (std::size_t k = 1; k <= n; ++k) {
    T acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += (alpha * T(double(j)) - T(double(k - j))) * a[j] * g[k - j];
    g[k] = acc / (T(double(k)) * a[0]);
  }
  return TruncatedSeries<T>(std::move(g));
}

/// exp(a), from g' = a' g.
template <class T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& a) {
  const std::size_t n = a.order();
  std::vector<T> g(n + 1, T{});
  g[0] = std::exp(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    T acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += T(double(j)) * a[j] * g[k - j];
    g[k] = acc / T(double(k));
  }
  return TruncatedSeries<T>(std::move(g));
}

/// outer(inner(w)) for inner with zero constant term; Horner in the outer
/// coefficients. Result order is min(outer.order(), inner.order()).
template <class T>
TruncatedSeries<T> series_compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
  if (std::abs(inner[0]) > 1e-14) throw DomainError("series_compose: inner series must have zero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  std::vector<T> zeroed(inner.coeffs().begin(), inner.coeffs().begin() + n + 1);
  zeroed[0] = T{};
  const TruncatedSeries<T> in(std::move(zeroed));
  TruncatedSeries<T> acc = TruncatedSeries<T>::constant(outer[n], n);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * in;
    std::vector<T> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += outer[i];
    acc = TruncatedSeries<T>(std::move(c));
  }
  return acc;
}

/// Functional inverse b with a(b(w)) = w through order N, for a_0 = 0 and
/// a_1 != 0. Newton iteration b <- b - (a(b) - w) / a'(b), doubling the number
/// of correct coefficients per step, plus one polishing step at full order.
template <class T>
TruncatedSeries<T> series_revert(const TruncatedSeries<T>& a) {
  if (std::abs(a[0]) > 1e-14) throw NotInvertible("series_revert: constant term must vanish");
  const std::size_t n = a.order();
  if (n == 0) throw NotInvertible("series_revert: order must be at least 1");
  if (std::abs(a[1]) < 1e-300) throw NotInvertible("series_revert: linear coefficient vanishes");

  std::vector<T> a0(a.coeffs().begin(), a.coeffs().end());
  a0[0] = T{};
  const TruncatedSeries<T> f(std::move(a0));
  const TruncatedSeries<T> df = f.derivative();

  std::vector<T> init(2, T{});
  init[1] = T{1} / f[1];
  TruncatedSeries<T> b(std::move(init));
  std::size_t correct = 1;
  bool polished = false;
  while (!polished) {
    if (correct >= n) polished = true;
    const std::size_t m = std::min(2 * correct, n);
    const TruncatedSeries<T> bm = b.resized(m);
    const TruncatedSeries<T> residual = series_compose(f.resized(m), bm) - TruncatedSeries<T>::variable(m);
    const TruncatedSeries<T> slope = series_compose(df.resized(m), bm);
    b = bm - residual * series_power(slope, T{-1});
    correct = m;
  }
  return b;
}

}  // namespace kratzel

#pragma once

// Coefficient generation for Laplace-type integrals expanded about a simple
// saddle. Given the Taylor coefficients d_n of
//   f(t_s + s) - f(t_s) = d_2 s^2 + d_3 s^3 + ...      (d_2 != 0)
// define w by w^2 / 2 = f(t_s + s) - f(t_s), choosing the branch with
// ds/dw > 0 at the saddle, invert to get s(w), and read off the even
// coefficients of G(s(w)) ds/dw for an amplitude series G.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kratzel/errors.hpp"
#include "kratzel/numerics.hpp"
#include "kratzel/series.hpp"

namespace kratzel {

/// Reversion order used for K even coefficients: w^{2K} plus guard terms.
inline constexpr std::size_t reversion_order(std::size_t K) { return 2 * K + 4; }

/// s(w) through order N. Needs taylor[0..N+1] (taylor[0], taylor[1] are
/// ignored and treated as zero).
template <class T>
TruncatedSeries<T> saddle_inverse_map(std::span<const T> taylor, std::size_t N) {
  if (taylor.size() < N + 2)
    throw DomainError("saddle_inverse_map: need " + std::to_string(N + 2) + " Taylor coefficients");
  if (std::abs(taylor[2]) == 0.0) throw DomainError("saddle_inverse_map: saddle is not simple (d_2 = 0)");

  // w = s * sqrt(2 q(s)),  q(s) = d_2 + d_3 s + ...
  std::vector<T> q(N);
  for (std::size_t j = 0; j < N; ++j) q[j] = T(2.0) * taylor[j + 2];
  const auto root = series_power(TruncatedSeries<T>(std::move(q)), T(0.5));
  std::vector<T> w(N + 1, T{});
  for (std::size_t j = 1; j <= N; ++j) w[j] = root[j - 1];
  return series_revert(TruncatedSeries<T>(std::move(w)));
}

template <class T>
TruncatedSeries<T> saddle_inverse_map(const std::vector<T>& taylor, std::size_t N) {
  return saddle_inverse_map(std::span<const T>(taylor), N);
}

/// Coefficients e_0, e_2, ..., e_{2K} of G(s(w)) s'(w).
template <class T>
std::vector<T> saddle_even_coefficients(std::span<const T> taylor, const TruncatedSeries<T>& amplitude,
                                        std::size_t K) {
  const std::size_t N = reversion_order(K);
  const auto s = saddle_inverse_map(taylor, N);
  const auto g = series_compose(amplitude.resized(N), s);
  const auto integrand = g * s.derivative();
  std::vector<T> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) out[k] = integrand[2 * k];
  return out;
}

template <class T>
std::vector<T> saddle_even_coefficients(const std::vector<T>& taylor, const TruncatedSeries<T>& amplitude,
                                        std::size_t K) {
  return saddle_even_coefficients(std::span<const T>(taylor), amplitude, K);
}

/// Generalised binomial coefficient C(p, n).
template <class R = double>
R binomial(R p, std::size_t n) {
  R r = 1;
  for (std::size_t j = 0; j < n; ++j) r *= (p - R(j)) / R(j + 1);
  return r;
}

inline std::vector<Scalar> narrow(const std::vector<WideScalar>& v) {
  std::vector<Scalar> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(double(v[i].real()), double(v[i].imag()));
  return out;
}

}  // namespace kratzel

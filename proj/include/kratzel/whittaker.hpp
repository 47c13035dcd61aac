#pragma once

// Large-|x| expansions of the Bessel-kernel integrals on (0,1)
//   I(a,b;z) = sqrt(2p/pi) int_0^1 t^{a-1/2} (1-t)^{b-1/2} e^{zt} K_nu(p/(t(1-t))) dt
//   J(a,b;z) = int_0^1 t^a (1-t)^b e^{zt} exp(-p/(t(1-t))) dt
// as sums of K_{a+1+r}(2 sqrt(px)) for z = -x, and through I(a,b;z) = e^z I(b,a;-z)
// for Re z > 0.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "kratzel/errors.hpp"
#include "kratzel/expansion.hpp"
#include "kratzel/numerics.hpp"
#include "kratzel/series.hpp"

namespace kratzel {

struct WhittakerParams {
  double a = 0.0;
  double b = 0.0;
  double p = 1.0;
  double nu = 0.0;

  void validate() const {
    if (!(p > 0.0)) throw DomainError("WhittakerParams: p must be positive");
    if (!(nu >= -0.5)) throw DomainError("WhittakerParams: nu must be >= -1/2");
  }

  WhittakerParams swapped() const { return {b, a, p, nu}; }
};

/// Hankel coefficients a_k(nu) = (-1)^k (1/2+nu)_k (1/2-nu)_k / (k! 2^k), k = 0..K.
inline std::vector<double> coeffs_a(double nu, std::size_t K) {
  if (K > 30) throw DomainError("coeffs_a: K must be at most 30");
  std::vector<double> out(K + 1);
  double fact = 1.0;
  for (std::size_t k = 0; k <= K; ++k) {
    if (k > 0) fact *= double(k);
    out[k] = ((k % 2) ? -1.0 : 1.0) * pochhammer(0.5 + nu, unsigned(k)) * pochhammer(0.5 - nu, unsigned(k)) /
             (fact * std::pow(2.0, double(k)));
  }
  return out;
}

/// Same coefficients from prod_{r=1}^k (4 nu^2 - (2r-1)^2) / (k! 8^k).
inline std::vector<double> coeffs_a_product(double nu, std::size_t K) {
  std::vector<double> out(K + 1);
  double prod = 1.0;
  for (std::size_t k = 0; k <= K; ++k) {
    if (k > 0) prod *= (4.0 * nu * nu - std::pow(2.0 * double(k) - 1.0, 2)) / (8.0 * double(k));
    out[k] = prod;
  }
  return out;
}

/// c_0(k)..c_R(k) with (1-w)^{b+k} exp(-p w/(1-w)) = sum_r (-1)^r c_r(k) w^r / r!.
inline std::vector<double> coeffs_cr(double b, double p, std::size_t k, std::size_t R) {
  if (R > 25) throw DomainError("coeffs_cr: R must be at most 25");
  const double beta = b + double(k);
  const auto one_minus_w = TruncatedSeries<Scalar>({Scalar(1.0), Scalar(-1.0)}).resized(R);
  std::vector<Scalar> geo(R + 1, Scalar(-p));  // -p w / (1-w) = -p (w + w^2 + ...)
  geo[0] = 0.0;
  const auto g = series_power(one_minus_w, Scalar(beta)) * series_exp(TruncatedSeries<Scalar>(std::move(geo)));
  std::vector<double> out(R + 1);
  double fact = 1.0;
  for (std::size_t r = 0; r <= R; ++r) {
    if (r > 0) fact *= double(r);
    out[r] = ((r % 2) ? -1.0 : 1.0) * fact * g[r].real();
  }
  return out;
}

/// Diagonal coefficients D_r = sum_{l=0}^r (-1)^l p^l / l! a_{r-l}(nu) c_l(r-l).
inline std::vector<double> coeffs_D(const WhittakerParams& w, std::size_t R) {
  w.validate();
  if (R > 20) throw DomainError("coeffs_D: R must be at most 20");
  const auto a = coeffs_a(w.nu, R);
  std::vector<double> D(R + 1, 0.0);
  for (std::size_t r = 0; r <= R; ++r) {
    double fact = 1.0;
    for (std::size_t l = 0; l <= r; ++l) {
      if (l > 0) fact *= double(l);
      const double cl = coeffs_cr(w.b, w.p, r - l, l)[l];
      D[r] += ((l % 2) ? -1.0 : 1.0) * std::pow(w.p, double(l)) / fact * a[r - l] * cl;
    }
  }
  return D;
}

namespace detail {

// e^z K_{order0 + r}(z), r = 0..R: two quadrature anchors, then the forward
// recurrence K_{m+1} = K_{m-1} + (2m/z) K_m.
inline std::vector<Scalar> bessel_k_scaled_ladder(double order0, Scalar z, std::size_t R) {
  std::vector<Scalar> k(R + 1);
  k[0] = bessel_k_scaled(order0, z);
  if (R >= 1) k[1] = bessel_k_scaled(order0 + 1.0, z);
  for (std::size_t r = 2; r <= R; ++r) {
    const double m = order0 + double(r) - 1.0;
    k[r] = k[r - 2] + (2.0 * m / z) * k[r - 1];
  }
  return k;
}

inline ExpansionResult bessel_sum_expansion(double a, double p, Scalar x, const std::vector<double>& coeffs) {
  if (x == Scalar(0.0) || !(std::abs(std::arg(x)) < 0.5 * pi)) throw DomainError("expansion requires |arg x| < pi/2");
  const std::size_t R = coeffs.size() - 1;
  const Scalar zeta = 2.0 * std::sqrt(p * x);
  const auto k = bessel_k_scaled_ladder(a + 1.0, zeta, R);
  std::vector<Scalar> terms(R + 1);
  for (std::size_t r = 0; r <= R; ++r) terms[r] = coeffs[r] * k[r] / std::pow(p * x, 0.5 * double(r));
  // 2 e^{-p} (p/x)^{(a+1)/2}, and e^{-zeta} from the scaled Bessel values.
  const Scalar log_pref = std::log(2.0) - p + 0.5 * (a + 1.0) * std::log(p / x) - zeta;
  return ExpansionResult::assemble(log_pref, std::move(terms));
}

}  // namespace detail

/// I(a,b;-x) ~ 2 e^{-p} (p/x)^{(a+1)/2} sum_r D_r K_{a+1+r}(2 sqrt(px)) / (px)^{r/2},
/// |arg x| < pi/2.
inline ExpansionResult expand_I(const WhittakerParams& w, Scalar x, std::size_t R) {
  return detail::bessel_sum_expansion(w.a, w.p, x, coeffs_D(w, R));
}

/// I(a,b;z) for Re z > 0 via I(a,b;z) = e^z I(b,a;-z).
inline ExpansionResult expand_I_pos(const WhittakerParams& w, Scalar z, std::size_t R) {
  if (!(z.real() > 0.0)) throw DomainError("expand_I_pos: requires Re z > 0");
  ExpansionResult r = expand_I(w.swapped(), z, R);
  return ExpansionResult::assemble(r.log_prefactor + z, std::move(r.terms));
}

/// J(a,b;-x) ~ 2 e^{-p} (p/x)^{(a+1)/2} sum_r (-1)^r p^r c_r(0) / r! K_{a+1+r}(2 sqrt(px)) / (px)^{r/2}.
inline ExpansionResult expand_J(double a, double b, double p, Scalar x, std::size_t R) {
  if (!(p > 0.0)) throw DomainError("expand_J: p must be positive");
  if (R > 20) throw DomainError("expand_J: R must be at most 20");
  const auto c = coeffs_cr(b, p, 0, R);
  std::vector<double> coeffs(R + 1);
  double fact = 1.0;
  for (std::size_t r = 0; r <= R; ++r) {
    if (r > 0) fact *= double(r);
    coeffs[r] = ((r % 2) ? -1.0 : 1.0) * std::pow(p, double(r)) * c[r] / fact;
  }
  return detail::bessel_sum_expansion(a, p, x, coeffs);
}

}  // namespace kratzel

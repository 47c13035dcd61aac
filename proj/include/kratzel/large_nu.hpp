#pragma once

// Kratzel's integral when the order grows with the argument, nu = 1 + a X.
// The exponent becomes X phi(tau), phi(tau) = tau^p/p + 1/tau - a log tau,
// with a single real saddle tau_s > 1 solving tau^{p+1} = 1 + a tau.

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "kratzel/errors.hpp"
#include "kratzel/expansion.hpp"
#include "kratzel/numerics.hpp"
#include "kratzel/series.hpp"
#include "kratzel/steepest_descent.hpp"

namespace kratzel {

struct SaddleInfo {
  double tau_s = 1.0;
  double phi_s = 0.0;
  std::vector<long double> phi_derivs;  // phi_derivs[i] = phi^{(i+2)}(tau_s)
  std::vector<Scalar> C;           // C_0 .. C_K

  double phi2() const { return double(phi_derivs.at(0)); }
};

/// Real root tau_s > 1 of tau^{p+1} = 1 + a tau: bisection-safeguarded Newton.
inline SaddleInfo solve_saddle(double p, double a) {
  if (!(p > 0.0) || !(a > 0.0)) throw DomainError("solve_saddle: requires p > 0 and a > 0");
  auto f = [&](double t) { return std::pow(t, p + 1.0) - 1.0 - a * t; };
  auto df = [&](double t) { return (p + 1.0) * std::pow(t, p) - a; };
  double lo = 1.0;
  double hi = 2.0;
  while (f(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw ConvergenceError("solve_saddle: no bracket");
  }
  double t = hi;
  for (int it = 0; it < 200; ++it) {
    const double ft = f(t);
    if (ft > 0.0)
      hi = t;
    else
      lo = t;
    double next = t - ft / df(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-16 * t || hi - lo <= 4e-16 * hi) {
      SaddleInfo s;
      // Final step in long double: near tau ~ 10^3 the double residual is all rounding.
      const long double tl = std::abs(f(next)) < std::abs(ft) ? next : t;
      const long double pl = p, al = a;
      s.tau_s = double(tl - (std::pow(tl, pl + 1) - 1 - al * tl) / ((pl + 1) * std::pow(tl, pl) - al));
      s.phi_s = std::pow(s.tau_s, p) / p + 1.0 / s.tau_s - a * std::log(s.tau_s);
      return s;
    }
    t = next;
  }
  throw ConvergenceError("solve_saddle: no convergence after 200 iterations");
}

/// phi^{(n)}(tau) for n = 0..n_max, phi(tau) = tau^p/p + 1/tau - a log tau.
template <class R = double>
std::vector<R> phi_derivatives(R p, R a, R tau, std::size_t n_max) {
  std::vector<R> d(n_max + 1);
  d[0] = std::pow(tau, p) / p + 1 / tau - a * std::log(tau);
  R falling = 1;    // (p-1)(p-2)...(p-n+1)
  R factorial = 1;  // n!
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n >= 2) falling *= p - R(n - 1);
    factorial *= R(n);
    const R sign = (n % 2) ? -1 : 1;
    d[n] = falling * std::pow(tau, p - R(n)) + sign * factorial / std::pow(tau, R(n) + 1) +
           a * sign * (factorial / R(n)) / std::pow(tau, R(n));
  }
  return d;
}

/// Saddle data and C_0..C_K of dtau/dw = phi_s''^{-1/2} sum_k C_k w^{2k} (even part).
inline SaddleInfo coeffs_C(double p, double a, std::size_t K) {
  if (K > 15) throw DomainError("coeffs_C: K must be at most 15");
  SaddleInfo s = solve_saddle(p, a);
  const std::size_t N = reversion_order(K);
  // One Newton step in long double so the expansion point matches the working precision.
  const long double pl = p, al = a;
  long double t = s.tau_s;
  t -= (std::pow(t, pl + 1) - 1 - al * t) / ((pl + 1) * std::pow(t, pl) - al);
  const auto d = phi_derivatives<long double>(pl, al, t, N + 1);
  std::vector<WideScalar> taylor(N + 2, WideScalar{});
  long double factorial = 1;
  for (std::size_t n = 1; n <= N + 1; ++n) {
    factorial *= (long double)n;
    if (n >= 2) taylor[n] = d[n] / factorial;
  }
  s.phi_derivs.assign(d.begin() + 2, d.end());
  s.C = narrow(saddle_even_coefficients(taylor, TruncatedSeries<WideScalar>::constant(1.0L, N), K));
  const double root = std::sqrt(double(d[2]));
  for (auto& c : s.C) c *= root;
  return s;
}

/// nu = 1 + a X paired with x in the large-order expansion.
inline Scalar large_nu_order(double p, double a, Scalar x) {
  return 1.0 + a * std::pow(p, 1.0 / (p + 1.0)) * std::exp(p / (p + 1.0) * std::log(x));
}

/// F_{p, 1 + aX}(x) ~ sqrt(2 pi / (X phi_s'')) (x/p)^{nu/(p+1)} e^{-kappa X / tau_s - a X / p}
///                    tau_s^{a X} sum_k (1/2)_k C_k (X/2)^{-k},   |arg x| < pi/2.
inline ExpansionResult expand_F_large_nu(double p, double a, Scalar x, std::size_t K) {
  if (x == Scalar(0.0) || !(std::abs(std::arg(x)) < 0.5 * pi))
    throw DomainError("expand_F_large_nu: requires |arg x| < pi/2");
  const SaddleInfo s = coeffs_C(p, a, K);
  const Scalar X = std::pow(p, 1.0 / (p + 1.0)) * std::exp(p / (p + 1.0) * std::log(x));
  const Scalar nu = 1.0 + a * X;
  const double kappa = (p + 1.0) / p;
  std::vector<Scalar> terms(K + 1);
  for (std::size_t k = 0; k <= K; ++k) terms[k] = pochhammer(0.5, unsigned(k)) * s.C[k] / std::pow(0.5 * X, double(k));
  const Scalar log_pref = 0.5 * std::log(2.0 * pi / (X * s.phi2())) + nu / (p + 1.0) * std::log(x / p) -
                          kappa * X / s.tau_s - a * X / p + a * X * std::log(s.tau_s);
  return ExpansionResult::assemble(log_pref, std::move(terms));
}

}  // namespace kratzel

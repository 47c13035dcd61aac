#pragma once

// Reference values of the Kratzel integral and the two Bessel-kernel integrals
// on (0,1) by double-exponential quadrature.
//
// Every integral is first written over the real line in a log variable u
// (t = e^u on (0,inf), t = 1/(1+e^-u) on (0,1)), with the integrand supplied
// as its complex logarithm. The engine locates the maximum modulus, rescales
// by it, maps u = c + w sinh(v) around the peak and applies the trapezoid
// rule in v with step halving until two levels agree to rel_tol.

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "kratzel/errors.hpp"
#include "kratzel/numerics.hpp"

namespace kratzel {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  int max_level = 12;
  double initial_step = 0.5;

  void validate() const {
    if (!(rel_tol > 1e-15 && rel_tol < 1e-2)) throw DomainError("QuadratureConfig: rel_tol must lie in (1e-15, 1e-2)");
    if (max_level < 1 || max_level > 16) throw DomainError("QuadratureConfig: max_level must lie in [1, 16]");
    if (!(initial_step > 0.0 && initial_step <= 2.0))
      throw DomainError("QuadratureConfig: initial_step must lie in (0, 2]");
  }
};

/// mantissa * exp(log_scale); keeps tiny or huge integrals representable.
struct ScaledValue {
  Scalar mantissa;
  double log_scale = 0.0;

  Scalar value() const { return mantissa * std::exp(log_scale); }
  Scalar times_exp(Scalar log_factor) const { return mantissa * std::exp(log_factor + log_scale); }
};

/// Diagnostics of the last level pair; exposed for the self-convergence tests.
struct QuadratureReport {
  int levels = 0;
  double last_change = 0.0;  // |T_l - T_{l-1}| / |T_l|
  long evaluations = 0;
};

namespace detail {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

template <class LogF>
double log_modulus(LogF& log_f, double u) {
  const double r = log_f(u).real();
  return std::isnan(r) ? neg_inf : r;
}

// Golden-section search for the maximum of a unimodal function on [lo, hi].
template <class F>
double golden_max(F& f, double lo, double hi) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < 100 && b - a > 1e-10 * (1.0 + std::abs(a)); ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

/// Integral over the real line of exp(log_f(u)). The modulus of the integrand
/// must be unimodal with its peak inside [scan_lo, scan_hi].
template <class LogF>
ScaledValue integrate_log_integrand(LogF&& log_f, const QuadratureConfig& cfg, QuadratureReport* report = nullptr,
                                    double scan_lo = -50.0, double scan_hi = 50.0) {
  cfg.validate();
  long evals = 0;
  auto modulus = [&](double u) {
    ++evals;
    return detail::log_modulus(log_f, u);
  };

  // Peak location.
  constexpr double scan_step = 0.25;
  double best_u = scan_lo;
  double best = detail::neg_inf;
  for (double u = scan_lo; u <= scan_hi + 1e-12; u += scan_step) {
    const double m = modulus(u);
    if (m > best) {
      best = m;
      best_u = u;
    }
  }
  if (!std::isfinite(best)) throw ConvergenceError("quadrature: integrand vanishes on the whole scan range");
  if (best_u <= scan_lo + 0.5 * scan_step || best_u >= scan_hi - 0.5 * scan_step)
    throw ConvergenceError("quadrature: integrand peak lies outside the scan range");
  const double centre = detail::golden_max(modulus, best_u - scan_step, best_u + scan_step);
  const double shift = modulus(centre);

  // Width from the curvature of log|f| at the peak.
  double width = 1.0;
  for (double delta = 1e-2; delta > 1e-7; delta *= 0.1) {
    const double curv = -(modulus(centre + delta) - 2.0 * shift + modulus(centre - delta)) / (delta * delta);
    if (!(curv > 0.0) || !std::isfinite(curv)) break;
    width = 1.0 / std::sqrt(curv);
    if (delta < 0.1 * width) break;
  }
  width = std::clamp(width, 1e-10, 10.0);

  constexpr double v_max = 12.0;
  auto node = [&](double v) -> Scalar {
    const double u = centre + width * std::sinh(v);
    ++evals;
    const Scalar lf = log_f(u);
    if (std::isnan(lf.real()) || lf.real() == detail::neg_inf) {
      if (std::abs(v) < 1.0) throw ConvergenceError("quadrature: integrand undefined near its peak");
      return Scalar(0.0);
    }
    const double rel = lf.real() - shift;
    if (rel > 700.0) throw ConvergenceError("quadrature: integrand peak was not located");
    if (rel < -745.0) return Scalar(0.0);
    const Scalar val = std::exp(Scalar(rel, lf.imag())) * (width * std::cosh(v));
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
      if (std::abs(v) < 1.0) throw ConvergenceError("quadrature: integrand undefined near its peak");
      return Scalar(0.0);
    }
    return val;
  };

  // Sum over v = (first + stride * j) * h for j = 0, 1, ... in one direction,
  // stopping once the tail is negligible against the peak scale.
  double scale = 0.0;
  auto sweep = [&](double h, long first, long stride, int dir) {
    Scalar s{};
    for (long k = first;; k += stride) {
      const double v = dir * k * h;
      if (std::abs(v) > v_max) {
        if (std::abs(node(dir * v_max)) > 1e-16 * scale)
          throw ConvergenceError("quadrature: integrand tail not resolved within the DE range");
        break;
      }
      const Scalar t = node(v);
      s += t;
      scale = std::max(scale, std::abs(t));
      if (std::abs(v) > 1.0 && std::abs(t) < 1e-20 * scale) break;
    }
    return s;
  };

  double h = cfg.initial_step;
  Scalar raw = node(0.0);
  scale = std::abs(raw);
  raw += sweep(h, 1, 1, +1) + sweep(h, 1, 1, -1);
  Scalar prev = h * raw;
  for (int level = 1; level <= cfg.max_level; ++level) {
    h *= 0.5;
    raw += sweep(h, 1, 2, +1) + sweep(h, 1, 2, -1);
    const Scalar cur = h * raw;
    const double change = std::abs(cur - prev) / std::abs(cur);
    if (report) *report = QuadratureReport{level, change, evals};
    if (level >= 2 && change <= cfg.rel_tol) return ScaledValue{cur, shift};
    prev = cur;
  }
  throw ConvergenceError("quadrature: tolerance not met after " + std::to_string(cfg.max_level) + " levels");
}

/// F_{p,nu}(x) = int_0^inf t^{nu-1} exp(-t^p - x/t) dt.
/// p > 0: the scaled form (x/p)^{nu/(p+1)} int_0^inf tau^{nu-1} e^{-X psi(tau)}
/// along real tau, X = p^{1/(p+1)} x^{p/(p+1)}, valid for |arg X| < pi/2.
/// p <= 0: the defining integral directly, needing Re nu < 0 and Re x > 0.
inline Scalar kratzel_quadrature(double p, Scalar nu, Scalar x, const QuadratureConfig& cfg = {},
                                 QuadratureReport* report = nullptr) {
  if (!std::isfinite(p)) throw DomainError("kratzel_quadrature: p must be finite");
  if (x == Scalar(0.0)) throw DomainError("kratzel_quadrature: x must be non-zero");
  if (p > 0.0) {
    const double e = p / (p + 1.0);
    if (std::abs(e * std::arg(x)) >= 0.5 * pi)
      throw DomainError("kratzel_quadrature: |arg X| must be below pi/2");
    const Scalar X = std::pow(p, 1.0 / (p + 1.0)) * std::exp(e * std::log(x));
    auto log_f = [&](double u) -> Scalar {
      const double psi = std::exp(p * u) / p + std::exp(-u);
      return nu * u - X * psi;
    };
    const auto r = integrate_log_integrand(log_f, cfg, report);
    return r.times_exp(nu / (p + 1.0) * std::log(x / p));
  }
  if (!(nu.real() < 0.0)) throw DomainError("kratzel_quadrature: p <= 0 requires Re nu < 0");
  if (!(x.real() > 0.0)) throw DomainError("kratzel_quadrature: p <= 0 requires Re x > 0");
  auto log_f = [&](double u) -> Scalar { return nu * u - std::exp(p * u) - x * std::exp(-u); };
  // Right tail decays only like e^{Re(nu) u}; widen the scan so slowly
  // decaying cases still peak inside it.
  return integrate_log_integrand(log_f, cfg, report, -60.0, 60.0).value();
}

namespace detail {

// log t and log(1-t) for t = 1/(1+e^{-u}), accurate at both ends.
inline double log_logistic(double u) { return u >= 0.0 ? -std::log1p(std::exp(-u)) : u - std::log1p(std::exp(u)); }

inline double logistic(double u) { return u >= 0.0 ? 1.0 / (1.0 + std::exp(-u)) : std::exp(u) / (1.0 + std::exp(u)); }

}  // namespace detail

/// I(a,b;z) = sqrt(2p/pi) int_0^1 t^{a-1/2} (1-t)^{b-1/2} e^{zt} K_nu(p/(t(1-t))) dt.
inline Scalar whittaker_i_quadrature(double a, double b, Scalar z, double p, double nu, const QuadratureConfig& cfg = {},
                                     QuadratureReport* report = nullptr) {
  if (!(p > 0.0)) throw DomainError("whittaker_i_quadrature: p must be positive");
  if (!(nu >= -0.5)) throw DomainError("whittaker_i_quadrature: nu must be >= -1/2");
  const double log_norm = 0.5 * std::log(2.0 * p / pi);
  auto log_f = [&](double u) -> Scalar {
    const double lt = detail::log_logistic(u);
    const double l1t = detail::log_logistic(-u);
    const double t = detail::logistic(u);
    // p / (t (1-t)) = 2 p (1 + cosh u)
    const double y = 2.0 * p * (1.0 + std::cosh(u));
    if (!std::isfinite(y)) return Scalar(detail::neg_inf);
    const Scalar log_k = -y + std::log(bessel_k_scaled(nu, Scalar(y)));
    // dt = t (1-t) du
    return log_norm + (a + 0.5) * lt + (b + 0.5) * l1t + z * t + log_k;
  };
  return integrate_log_integrand(log_f, cfg, report).value();
}

/// J(a,b;z) = int_0^1 t^a (1-t)^b e^{zt} exp(-p/(t(1-t))) dt.
inline Scalar whittaker_j_quadrature(double a, double b, Scalar z, double p, const QuadratureConfig& cfg = {},
                                     QuadratureReport* report = nullptr) {
  if (!(p > 0.0)) throw DomainError("whittaker_j_quadrature: p must be positive");
  auto log_f = [&](double u) -> Scalar {
    const double lt = detail::log_logistic(u);
    const double l1t = detail::log_logistic(-u);
    const double t = detail::logistic(u);
    const double y = 2.0 * p * (1.0 + std::cosh(u));
    return (a + 1.0) * lt + (b + 1.0) * l1t + z * t - y;
  };
  return integrate_log_integrand(log_f, cfg, report).value();
}

}  // namespace kratzel

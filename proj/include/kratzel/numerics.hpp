#pragma once

// Scalar special functions: gamma, log-gamma, Pochhammer and the exponentially
// scaled Macdonald function e^z K_nu(z).

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "kratzel/errors.hpp"

namespace kratzel {

using Scalar = std::complex<double>;
/// Working type for coefficient generation, where cancellation in the
/// reversion costs several digits in double.
using WideScalar = std::complex<long double>;

inline constexpr double pi = std::numbers::pi;

// Distance below which a gamma argument counts as sitting on a pole.
inline constexpr double pole_tolerance = 1e-12;

namespace detail {

// Lanczos approximation, g = 7, n = 9.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coeffs = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};

// sin(pi z) with the argument reduced to the nearest integer first, so the
// zeros at the integers come out clean.
inline Scalar sin_pi(Scalar z) {
  const double n = std::round(z.real());
  const Scalar r = std::sin(pi * (z - n));
  return std::fmod(std::abs(n), 2.0) == 1.0 ? -r : r;
}

inline bool near_nonpositive_integer(Scalar z, double tol) {
  if (z.real() > 0.5) return false;
  const double n = std::round(z.real());
  return std::abs(z - Scalar(n, 0.0)) < tol;
}

inline std::string format_scalar(Scalar z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

// log of the Lanczos series for Re z >= 1/2.
inline Scalar log_gamma_lanczos(Scalar z) {
  z -= 1.0;
  Scalar sum = lanczos_coeffs[0];
  for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i) sum += lanczos_coeffs[i] / (z + double(i));
  const Scalar t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

inline Scalar gamma_lanczos(Scalar z) {
  z -= 1.0;
  Scalar sum = lanczos_coeffs[0];
  for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i) sum += lanczos_coeffs[i] / (z + double(i));
  const Scalar t = z + lanczos_g + 0.5;
  if (z.imag() == 0.0 && t.real() > 0.0) {
    // Split the power to keep the real-axis path free of complex exp/log
    // roundoff.
    const double tr = t.real();
    const double half = std::pow(tr, 0.5 * (z.real() + 0.5));
    return std::sqrt(2.0 * pi) * half * (half * std::exp(-tr)) * sum;
  }
  return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * sum;
}

}  // namespace detail

/// Gamma function for complex argument. Lanczos approximation for
/// Re z >= 1/2, reflection Gamma(z) = pi / (sin(pi z) Gamma(1-z)) otherwise.
/// Throws PoleError within `pole_tolerance` of 0, -1, -2, ...
inline Scalar gamma(Scalar z) {
  if (detail::near_nonpositive_integer(z, pole_tolerance))
    throw PoleError("gamma: argument " + detail::format_scalar(z) + " is at a pole");
  if (z.real() < 0.5) return pi / (detail::sin_pi(z) * gamma(1.0 - z));
  return detail::gamma_lanczos(z);
}

inline double gamma(double x) { return gamma(Scalar(x, 0.0)).real(); }

/// log Gamma(z), defined modulo 2 pi i. Only exp(log_gamma(z)) is meaningful
/// on the reflected half-plane; use this when Gamma itself over- or underflows.
inline Scalar log_gamma(Scalar z) {
  if (detail::near_nonpositive_integer(z, pole_tolerance))
    throw PoleError("log_gamma: argument " + detail::format_scalar(z) + " is at a pole");
  if (z.real() < 0.5) return std::log(pi) - std::log(detail::sin_pi(z)) - log_gamma(1.0 - z);
  return detail::log_gamma_lanczos(z);
}

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
template <class T>
T pochhammer(T a, unsigned k) {
  T r{1};
  for (unsigned i = 0; i < k; ++i) r *= a + T(double(i));
  return r;
}

namespace detail {

// Trapezoid sum of f(u) = exp(-z (cosh u - 1)) cosh(nu u) over u >= 0 at step h.
// The even integrand makes the half-line trapezoid spectrally accurate.
inline Scalar bessel_trapezoid(double nu, Scalar z, double h) {
  Scalar sum = 0.5;  // f(0) / 2
  double peak = 0.5;
  bool past_peak = false;
  double prev = 1.0;
  for (int k = 1; k < 1000000; ++k) {
    const double u = k * h;
    const double s = std::sinh(0.5 * u);
    const double cm1 = 2.0 * s * s;
    const Scalar e = -z * cm1;
    // cosh(nu u) folded into the exponent to avoid overflow for large nu u.
    const double lc = std::abs(nu) * u + std::log1p(std::exp(-2.0 * std::abs(nu) * u)) - std::log(2.0);
    const Scalar term = std::exp(e + lc);
    const double mag = std::abs(term);
    sum += term;
    peak = std::max(peak, mag);
    if (mag < prev) past_peak = true;
    prev = mag;
    if (past_peak && mag < 1e-19 * peak) break;
  }
  return h * sum;
}

}  // namespace detail

/// e^z K_nu(z) for real order nu and |arg z| < pi/4, from
///   e^z K_nu(z) = int_0^inf exp(-z (cosh u - 1)) cosh(nu u) du
/// by step-halving trapezoid quadrature. Symmetric in nu.
inline Scalar bessel_k_scaled(double nu, Scalar z) {
  if (z == Scalar(0.0)) throw DomainError("bessel_k_scaled: z must be non-zero");
  if (std::abs(std::arg(z)) >= 0.25 * pi)
    throw DomainError("bessel_k_scaled: |arg z| must be below pi/4, got z = " + detail::format_scalar(z));
  if (!std::isfinite(nu) || !std::isfinite(std::abs(z))) throw DomainError("bessel_k_scaled: non-finite input");

  double h = std::min(1.0, 1.0 / std::sqrt(std::abs(z)));
  Scalar prev = detail::bessel_trapezoid(nu, z, h);
  for (int level = 1; level <= 30; ++level) {
    h *= 0.5;
    const Scalar cur = detail::bessel_trapezoid(nu, z, h);
    if (std::abs(cur - prev) <= 1e-14 * std::abs(cur)) return cur;
    prev = cur;
  }
  throw ConvergenceError("bessel_k_scaled: quadrature did not converge");
}

}  // namespace kratzel

#pragma once

// Expansions of Kratzel's integral
//   F_{p,nu}(x) = int_0^inf t^{nu-1} exp(-t^p - x/t) dt
// for large |x|: the saddle-point expansion with numerically generated B_k,
// the equivalent Mellin-Barnes (inverse factorial) form, the convergent
// residue series, and the p < 0 expansions.

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

enum class Regime { PPositive, PZero, PMinusOne, PInMinusOneZero, PLessMinusOne };

inline Regime regime_of(double p) {
  if (p > 0.0) return Regime::PPositive;
  if (p == 0.0) return Regime::PZero;
  if (p == -1.0) return Regime::PMinusOne;
  if (p > -1.0) return Regime::PInMinusOneZero;
  return Regime::PLessMinusOne;
}

class KratzelParams {
 public:
  KratzelParams(double p, Scalar nu) : p_(p), nu_(nu), regime_(regime_of(p)) {
    if (!std::isfinite(p) || !std::isfinite(nu.real()) || !std::isfinite(nu.imag()))
      throw DomainError("KratzelParams: non-finite parameter");
    if (regime_ != Regime::PPositive && !(nu.real() < 0.0))
      throw DomainError("KratzelParams: p <= 0 requires Re nu < 0");
  }

  double p() const { return p_; }
  Scalar nu() const { return nu_; }
  Regime regime() const { return regime_; }

  // Mellin-Barnes constants; meaningful for p > 0.
  double kappa() const { return (p_ + 1.0) / p_; }
  double h() const { return std::pow(p_, 1.0 / p_); }
  Scalar theta() const { return nu_ / p_ - 0.5; }
  Scalar A0() const {
    return std::pow(2.0 * pi, -0.5) * std::exp((0.5 - theta()) * std::log(kappa()) - theta() * std::log(p_));
  }

  /// X = p^{1/(p+1)} x^{p/(p+1)}, principal branch.
  Scalar large_variable(Scalar x) const { return std::pow(p_, 1.0 / (p_ + 1.0)) * std::exp(p_ / (p_ + 1.0) * std::log(x)); }

 private:
  double p_;
  Scalar nu_;
  Regime regime_;
};

namespace detail {

inline void require_positive_p(double p, const char* who) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError(std::string(who) + ": requires p > 0");
}

inline void require_right_half_plane(Scalar x, const char* who) {
  if (x == Scalar(0.0) || !(std::abs(std::arg(x)) < 0.5 * pi))
    throw DomainError(std::string(who) + ": requires |arg x| < pi/2");
}

// Taylor coefficients of psi(1+s) - psi(1), psi(tau) = tau^p / p + 1/tau.
inline std::vector<WideScalar> psi_taylor(double p, std::size_t count) {
  const long double pw = p;
  std::vector<WideScalar> d(count);
  for (std::size_t n = 0; n < count; ++n) d[n] = binomial(pw, n) / pw + ((n % 2) ? -1.0L : 1.0L);
  d[0] = d[1] = 0.0;
  return d;
}

}  // namespace detail

/// Coefficients A_1..A_K of tau = 1 + (p+1)^{-1/2} sum_k A_k w^k, where
/// w^2/2 = psi(tau) - psi(1). Index 0 holds 0.
inline std::vector<Scalar> coeffs_A(double p, std::size_t K) {
  detail::require_positive_p(p, "coeffs_A");
  const auto d = detail::psi_taylor(p, K + 2);
  const auto s = saddle_inverse_map(d, K);
  std::vector<Scalar> A(K + 1);
  for (std::size_t k = 0; k <= K; ++k) A[k] = std::sqrt(p + 1.0) * Scalar(double(s[k].real()), double(s[k].imag()));
  return A;
}

/// B_0..B_K of tau^{nu-1} dtau/dw = (p+1)^{-1/2} sum_k B_k w^{2k} (even part).
inline std::vector<Scalar> coeffs_B(double p, Scalar nu, std::size_t K) {
  detail::require_positive_p(p, "coeffs_B");
  if (K > 20) throw DomainError("coeffs_B: K must be at most 20");
  const std::size_t N = reversion_order(K);
  const auto d = detail::psi_taylor(p, N + 2);
  // tau^{nu-1} = (1+s)^{nu-1}
  const WideScalar exponent(nu.real() - 1.0L, nu.imag());
  const auto amplitude =
      series_power(TruncatedSeries<WideScalar>({WideScalar(1.0L), WideScalar(1.0L)}).resized(N), exponent);
  auto e = narrow(saddle_even_coefficients(d, amplitude, K));
  for (auto& v : e) v *= std::sqrt(p + 1.0);
  return e;
}

/// Saddle-point expansion
///   F ~ sqrt(2 pi / ((p+1) X)) (x/p)^{nu/(p+1)} e^{-X (p+1)/p} sum_k (1/2)_k B_k (X/2)^{-k}
/// for |arg x| < pi/2.
inline ExpansionResult expand_F_saddle(const KratzelParams& params, Scalar x, std::size_t K) {
  detail::require_positive_p(params.p(), "expand_F_saddle");
  detail::require_right_half_plane(x, "expand_F_saddle");
  const double p = params.p();
  const Scalar nu = params.nu();
  const Scalar X = params.large_variable(x);
  const auto B = coeffs_B(p, nu, K);
  std::vector<Scalar> terms(K + 1);
  for (std::size_t k = 0; k <= K; ++k) terms[k] = pochhammer(0.5, unsigned(k)) * B[k] / std::pow(0.5 * X, double(k));
  const Scalar log_pref =
      0.5 * std::log(2.0 * pi / ((p + 1.0) * X)) + nu / (p + 1.0) * std::log(x / p) - X * (p + 1.0) / p;
  return ExpansionResult::assemble(log_pref, std::move(terms));
}

/// Inverse factorial coefficients c_j = (-1)^j (2 kappa)^j (1/2)_j B_j.
inline std::vector<Scalar> coeffs_c_mb(double p, Scalar nu, std::size_t K) {
  const auto B = coeffs_B(p, nu, K);
  const double kappa = (p + 1.0) / p;
  std::vector<Scalar> c(K + 1);
  for (std::size_t j = 0; j <= K; ++j)
    c[j] = ((j % 2) ? -1.0 : 1.0) * std::pow(2.0 * kappa, double(j)) * pochhammer(0.5, unsigned(j)) * B[j];
  return c;
}

/// Mellin-Barnes form
///   F ~ (2 pi A_0 / (kappa p)) (kappa X)^theta e^{-kappa X} sum_j (-1)^j c_j (kappa X)^{-j},
/// valid for |arg X| < pi/2. Term-by-term identical to expand_F_saddle.
inline ExpansionResult expand_F_mb(const KratzelParams& params, Scalar x, std::size_t K) {
  detail::require_positive_p(params.p(), "expand_F_mb");
  const double p = params.p();
  const Scalar X = params.large_variable(x);
  if (x == Scalar(0.0) || !(std::abs(std::arg(X)) < 0.5 * pi)) throw DomainError("expand_F_mb: requires |arg X| < pi/2");
  const double kappa = params.kappa();
  const auto c = coeffs_c_mb(p, params.nu(), K);
  std::vector<Scalar> terms(K + 1);
  for (std::size_t j = 0; j <= K; ++j) terms[j] = ((j % 2) ? -1.0 : 1.0) * c[j] / std::pow(kappa * X, double(j));
  const Scalar log_pref = std::log(2.0 * pi * params.A0() / (kappa * p)) + params.theta() * std::log(kappa * X) - kappa * X;
  return ExpansionResult::assemble(log_pref, std::move(terms));
}

namespace detail {

inline constexpr double log_case_tolerance = 1e-10;

// sum_k Gamma(arg(k)) step^k / k!, stopped once terms fall below 1e-17 of the
// partial sum while decreasing.
template <class ArgFn>
Scalar gamma_weighted_exponential_sum(ArgFn&& arg_of, Scalar step, const char* who) {
  const Scalar log_step = std::log(step);
  Scalar sum{};
  Scalar pw{1.0};
  Scalar lpw{0.0};
  double prev = std::numeric_limits<double>::infinity();
  int quiet = 0;
  for (int k = 0; k < 10000; ++k) {
    if (k > 0) {
      pw *= step / double(k);
      lpw += log_step - std::log(double(k));
    }
    const Scalar arg = arg_of(k);
    if (near_nonpositive_integer(arg, log_case_tolerance))
      throw LogarithmicCase(std::string(who) + ": gamma argument " + format_scalar(arg) +
                            " coincides with a pole (logarithmic case)");
    Scalar term;
    if (std::abs(arg) < 100.0 && pw != Scalar(0.0) && std::isfinite(std::abs(pw)))
      term = gamma(arg) * pw;
    else if (step == Scalar(0.0))
      term = 0.0;
    else
      term = std::exp(log_gamma(arg) + lpw);
    const double mag = std::abs(term);
    if (!std::isfinite(mag) || mag > 1e300) throw ConvergenceError(std::string(who) + ": series diverges");
    sum += term;
    if (mag <= prev && mag <= 1e-17 * std::abs(sum))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 3 || (step == Scalar(0.0))) return sum;
    prev = mag;
  }
  throw ConvergenceError(std::string(who) + ": no convergence within 10^4 terms");
}

}  // namespace detail

/// Wright function 1Psi0(a, b; z) = sum_k Gamma(a k + b) z^k / k!, 0 < a < 1.
inline Scalar wright_1psi0(double a, Scalar b, Scalar z) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("wright_1psi0: requires 0 < a < 1");
  return detail::gamma_weighted_exponential_sum([&](int k) { return a * k + b; }, z, "wright_1psi0");
}

/// Residues at s = -k:  sum_k Gamma((nu - k)/p) (-x)^k / k!.
inline Scalar residue_sum_integer_poles(double p, Scalar nu, Scalar x) {
  return detail::gamma_weighted_exponential_sum([&](int k) { return (nu - double(k)) / p; }, -x,
                                                "residue_sum_integer_poles");
}

/// Residues at s = -kp - nu:  x^nu sum_k Gamma(-kp - nu) (-x^p)^k / k!.
inline Scalar residue_sum_shifted_poles(double p, Scalar nu, Scalar x) {
  const Scalar xp = std::exp(p * std::log(x));
  return std::exp(nu * std::log(x)) *
         detail::gamma_weighted_exponential_sum([&](int k) { return -double(k) * p - nu; }, -xp,
                                                "residue_sum_shifted_poles");
}

/// Closed forms at p = 0 and p = -1 (Re nu < 0). At p = 0 the integrand
/// carries the constant factor exp(-t^0) = e^{-1}.
inline Scalar kratzel_closed_form(const KratzelParams& params, Scalar x) {
  switch (params.regime()) {
    case Regime::PZero:
      return std::exp(-1.0) * std::exp(params.nu() * std::log(x)) * gamma(-params.nu());
    case Regime::PMinusOne:
      return std::exp(params.nu() * std::log(1.0 + x)) * gamma(-params.nu());
    default:
      throw DomainError("kratzel_closed_form: only p = 0 and p = -1 have closed forms");
  }
}

/// Convergent series for F_{p,nu}(x):
///   p > 0:        (1/p) sum Gamma((nu-k)/p)(-x)^k/k! + x^nu sum Gamma(-nu-kp)(-x^p)^k/k!
///   -1 <= p < 0:  x^nu sum Gamma(-kp-nu)(-x^p)^k/k!     (needs |x| > 1 at p = -1)
///   p <= -1:      -(1/p) sum Gamma((nu-k)/p)(-x)^k/k!   (needs |x| < 1 at p = -1)
/// p = -1 picks whichever of the two converges; p = 0 uses the closed form.
inline Scalar F_series(const KratzelParams& params, Scalar x) {
  const double p = params.p();
  const Scalar nu = params.nu();
  if (x == Scalar(0.0)) throw DomainError("F_series: x must be non-zero");
  switch (params.regime()) {
    case Regime::PPositive:
      return residue_sum_integer_poles(p, nu, x) / p + residue_sum_shifted_poles(p, nu, x);
    case Regime::PZero:
      return kratzel_closed_form(params, x);
    case Regime::PInMinusOneZero:
      return residue_sum_shifted_poles(p, nu, x);
    case Regime::PLessMinusOne:
      return -residue_sum_integer_poles(p, nu, x) / p;
    case Regime::PMinusOne:
      if (std::abs(x) > 1.0) return residue_sum_shifted_poles(p, nu, x);
      if (std::abs(x) < 1.0) return residue_sum_integer_poles(p, nu, x);
      throw DomainError("F_series: p = -1 series do not converge at |x| = 1");
  }
  throw DomainError("F_series: unknown regime");
}

/// Truncated expansion x^nu sum_{k<=K} Gamma(-kp-nu) (-x^p)^k / k! for p < 0,
/// valid for |arg x| < (1 + 1/|p|) pi / 2.
inline ExpansionResult expand_F_neg_p(const KratzelParams& params, Scalar x, std::size_t K) {
  const double p = params.p();
  if (!(p < 0.0)) throw DomainError("expand_F_neg_p: requires p < 0");
  if (x == Scalar(0.0) || !(std::abs(std::arg(x)) < 0.5 * pi * (1.0 + 1.0 / std::abs(p))))
    throw DomainError("expand_F_neg_p: x outside the sector of validity");
  const Scalar nu = params.nu();
  const Scalar xp = std::exp(p * std::log(x));
  std::vector<Scalar> terms(K + 1);
  Scalar pw{1.0};
  for (std::size_t k = 0; k <= K; ++k) {
    if (k > 0) pw *= -xp / double(k);
    const Scalar arg = -double(k) * p - nu;
    if (detail::near_nonpositive_integer(arg, pole_tolerance))
      throw PoleError("expand_F_neg_p: Gamma(" + detail::format_scalar(arg) + ") is at a pole");
    terms[k] = gamma(arg) * pw;
  }
  return ExpansionResult::assemble(nu * std::log(x), std::move(terms));
}

}  // namespace kratzel

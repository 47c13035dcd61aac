#!/usr/bin/env python3
"""High-precision reference values for the test suites.

Independent of the C++ code paths:
  * expansion coefficients via the explicit Lagrange-Buermann formula
    [w^m] G(s(w)) s'(w) = [s^m] G(s) (s / w(s))^(m+1)
    evaluated with mpmath power-series arithmetic at 40 digits;
  * integrals via mpmath tanh-sinh quadrature at 30 digits.

Run:  python3 tests/oracles/generate_oracles.py
"""
import mpmath as mp

mp.mp.dps = 40


def ser_mul(a, b, n):
    return [mp.fsum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1)]


def ser_pow(a, alpha, n):
    # J.C.P. Miller recurrence for (a0 + a1 s + ...)^alpha
    out = [a[0] ** alpha] + [mp.mpf(0)] * n
    for k in range(1, n + 1):
        acc = mp.mpf(0)
        for j in range(1, k + 1):
            if j < len(a):
                acc += (alpha * j - (k - j)) * a[j] * out[k - j]
        out[k] = acc / (k * a[0])
    return out


def binom(p, n):
    return mp.binomial(p, n)


def laplace_coeffs(taylor, amp, K):
    """taylor[n] = coefficient of s^n in f(t0+s)-f(t0), n>=2.
    amp = series of the amplitude G(s). Returns e_{2k} of G(s(w)) s'(w) where w^2/2 = f-f0."""
    n = 2 * K + 2
    q = [2 * taylor[j + 2] for j in range(n + 1)]       # w^2 / s^2
    out = []
    for k in range(K + 1):
        m = 2 * k
        inv = ser_pow(q, -mp.mpf(m + 1) / 2, m)          # (s/w)^(m+1)
        out.append(ser_mul(amp, inv, m)[m])
    return out


def coeffs_B(p, nu, K):
    p, nu = mp.mpf(p), mp.mpf(nu)
    tay = [binom(p, n) / p + (-1) ** n for n in range(2 * K + 6)]
    amp = [binom(nu - 1, n) for n in range(2 * K + 6)]
    e = laplace_coeffs(tay, amp, K)
    return [mp.sqrt(p + 1) * v for v in e]


def saddle(p, a):
    p, a = mp.mpf(p), mp.mpf(a)
    return mp.findroot(lambda t: t ** (p + 1) - 1 - a * t, 1.5)


def coeffs_C(p, a, K):
    p, a = mp.mpf(p), mp.mpf(a)
    ts = saddle(p, a)
    tay = [mp.mpf(0)] * 2 + [binom(p, n) * ts ** (p - n) / p + (-1) ** n / ts ** (n + 1)
                            - a * (-1) ** (n - 1) / (n * ts ** n) for n in range(2, 2 * K + 6)]
    amp = [mp.mpf(1)] + [mp.mpf(0)] * (2 * K + 6)
    e = laplace_coeffs(tay, amp, K)
    phi2 = 2 * tay[2]
    return ts, [mp.sqrt(phi2) * v for v in e]


def kratzel(p, nu, x):
    p, nu, x = mp.mpf(p), mp.mpc(nu), mp.mpc(x)
    X = p ** (1 / (p + 1)) * x ** (p / (p + 1))
    f = lambda t: t ** (nu - 1) * mp.exp(-X * (t ** p / p + 1 / t))
    val = mp.quad(f, [0, 0.25, 0.5, 0.75, 1, 1.5, 2, 4, mp.inf])
    return (x / p) ** (nu / (p + 1)) * val


def kratzel_direct(p, nu, x):
    p, nu, x = mp.mpf(p), mp.mpc(nu), mp.mpc(x)
    f = lambda t: t ** (nu - 1) * mp.exp(-t ** p - x / t)
    return mp.quad(f, [0, 0.5, 1, 2, 4, 8, 16, mp.inf])


def saddle_expansion(p, nu, x, B, K):
    p, nu, x = mp.mpf(p), mp.mpf(nu), mp.mpc(x)
    X = p ** (1 / (p + 1)) * x ** (p / (p + 1))
    pref = mp.sqrt(2 * mp.pi / ((p + 1) * X)) * (x / p) ** (nu / (p + 1)) * mp.exp(-X * (p + 1) / p)
    return pref * mp.fsum(mp.rf(0.5, k) * B[k] / (X / 2) ** k for k in range(K + 1))


def large_nu_expansion(p, a, x, ts, C, K):
    p, a, x = mp.mpf(p), mp.mpf(a), mp.mpc(x)
    X = p ** (1 / (p + 1)) * x ** (p / (p + 1))
    nu = 1 + a * X
    phi2 = (1 / ts ** 2) * ((p + 1) / ts + a * p)
    phis = (p + 1) / (p * ts) + a / p - a * mp.log(ts)
    pref = mp.sqrt(2 * mp.pi / (X * phi2)) * (x / p) ** (nu / (p + 1)) * mp.exp(-X * phis)
    return pref * mp.fsum(mp.rf(0.5, k) * C[k] / (X / 2) ** k for k in range(K + 1)), nu


def whittaker_i(a, b, z, p, nu):
    a, b, p, nu = map(mp.mpf, (a, b, p, nu))
    z = mp.mpc(z)
    f = lambda t: t ** (a - 0.5) * (1 - t) ** (b - 0.5) * mp.exp(z * t) * mp.besselk(nu, p / (t * (1 - t)))
    pts = [0] + [mp.mpf(k) / 200 for k in range(1, 40)] + [0.25, 0.5, 0.75, 1]
    return mp.sqrt(2 * p / mp.pi) * mp.quad(f, pts)


def whittaker_j(a, b, z, p):
    a, b, p = map(mp.mpf, (a, b, p))
    z = mp.mpc(z)
    f = lambda t: t ** a * (1 - t) ** b * mp.exp(z * t) * mp.exp(-p / (t * (1 - t)))
    pts = [0] + [mp.mpf(k) / 200 for k in range(1, 40)] + [0.25, 0.5, 0.75, 1]
    return mp.quad(f, pts)


def a_k(nu, k):
    nu = mp.mpf(nu)
    return (-1) ** k * mp.rf(0.5 + nu, k) * mp.rf(0.5 - nu, k) / (mp.factorial(k) * 2 ** k)


def c_r(b, p, k, R):
    b, p = mp.mpf(b), mp.mpf(p)
    f = lambda w: (1 - w) ** (b + k) * mp.exp(-p * w / (1 - w))
    t = mp.taylor(f, 0, R)
    return [(-1) ** r * mp.factorial(r) * t[r] for r in range(R + 1)]


def expand_I(a, b, p, nu, x, R):
    a, b, p = map(mp.mpf, (a, b, p))
    x = mp.mpc(x)
    D = []
    for r in range(R + 1):
        D.append(mp.fsum((-1) ** l * p ** l / mp.factorial(l) * a_k(nu, r - l) * c_r(b, p, r - l, l)[l]
                         for l in range(r + 1)))
    z = 2 * mp.sqrt(p * x)
    terms = [D[r] * mp.besselk(a + 1 + r, z) / (p * x) ** (mp.mpf(r) / 2) for r in range(R + 1)]
    pref = 2 * mp.exp(-p) * (p / x) ** ((a + 1) / 2)
    return [pref * mp.fsum(terms[: r + 1]) for r in range(R + 1)], D


def e(v, d=17):
    return mp.nstr(v, d)


if __name__ == "__main__":
    print("== Table 1 (B_k)")
    for p, nu in ((0.75, 1.5), (1.5, 0.5), (2, 0.5)):
        B = coeffs_B(p, nu, 8)
        print(p, nu, [e(v) for v in B])
    print("== Table 2")
    for p, nu in ((0.75, 1.5), (1.5, 0.5)):
        F = kratzel(p, nu, 30)
        print("F", p, nu, e(F.real), "direct", e(kratzel_direct(p, nu, 30).real))
        B = coeffs_B(p, nu, 6)
        print("  relerr", [mp.nstr(abs(saddle_expansion(p, nu, 30, B, K) / F - 1), 6) for K in range(6)])
    print("== Table 3/4")
    for p, a in ((2, 1), (3, 0.5)):
        ts, C = coeffs_C(p, a, 6)
        print("tau_s", e(ts), "C", [e(v) for v in C])
        for th in (0, 0.1, 0.2, 0.3, 0.4, 0.45):
            x = 30 * mp.expjpi(th)
            approx, nu = large_nu_expansion(p, a, x, ts, C, 3)
            F = kratzel(p, nu, x)
            print("  theta", th, mp.nstr(abs(approx / F - 1), 6), "F", e(F, 20))
    print("== Table 5")
    for x in (100, 200, 500):
        I = whittaker_i(1, 1, -x, 1, mp.mpf(4) / 3)
        vals, D = expand_I(1, 1, 1, mp.mpf(4) / 3, x, 6)
        print("x", x, "I", e(I.real, 20), [mp.nstr(abs(v / I - 1), 6) for v in vals])
    print("D", [e(d) for d in D])
    print("c_r(b=1,p=1,k=0)", [e(v) for v in c_r(1, 1, 0, 5)])
    print("== Spot values")
    print("J(1,1;0,1)", e(whittaker_j(1, 1, 0, 1).real, 20))
    print("J(1,1;-100,1)", e(whittaker_j(1, 1, -100, 1).real, 20))
    print("J(1,1;5,1)", e(whittaker_j(1, 1, 5, 1).real, 20))
    print("I(1,2;3,1,4/3)", e(whittaker_i(1, 2, 3, 1, mp.mpf(4) / 3).real, 20))
    for p, nu, x in ((2, 1, 30), (-0.5, -1, 10), (2, 0.5, 5), (2, 0.5, 1), (-2, -0.5, 0.5)):
        print("F(%s,%s,%s)" % (p, nu, x), e(kratzel_direct(p, nu, x).real, 20))
    print("sqrt(pi)exp(-2)", e(mp.sqrt(mp.pi) * mp.exp(-2), 20))

"""Independent dense-table evaluation of s(k, l), for cross-checking only.

Deliberately shares no code or method with the package:

* series coefficients come from power-series inversion/division with bare
  factorials (no Bernoulli numbers),
* ring elements are plain (2n+3) x 2 nested-list coefficient tables over
  Q[x, y]/(x^(2n+3), y^2),
* the pairing <(1/c) * F, [B]> is evaluated through the substitution
  identities x^(2n+2)/c -> -k/l^2 and x^(2n+1)*y/c -> 1/l (both instances of
  x^2 = c*(l*x - k*y)/l^2), not through a linear solve.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def ahat_coefficients(order: int) -> list[Fraction]:
    """Coefficients of t^(2j), j = 0..order, in (t/2)/sinh(t/2), obtained by
    inverting sinh(t/2)/(t/2) = sum_i t^(2i) / (4^i (2i+1)!)."""
    u = [Fraction(1, 4 ** i * factorial(2 * i + 1)) for i in range(order + 1)]
    v = [Fraction(1)]
    for m in range(1, order + 1):
        v.append(-sum(u[i] * v[m - i] for i in range(1, m + 1)))
    return v


def lgenus_coefficients(order: int) -> list[Fraction]:
    """Coefficients of t^(2j), j = 0..order, in t/tanh(t) = cosh(t) divided
    by sinh(t)/t, obtained by long division of the two even series."""
    num = [Fraction(1, factorial(2 * i)) for i in range(order + 1)]
    den = [Fraction(1, factorial(2 * i + 1)) for i in range(order + 1)]
    w: list[Fraction] = []
    for m in range(order + 1):
        w.append(num[m] - sum(den[i] * w[m - i] for i in range(1, m + 1)))
    return w


def mixing(m: int) -> Fraction:
    return Fraction(1, 2 ** (2 * m + 1) * (2 ** (2 * m - 1) - 1))


def _table(n: int) -> list[list[Fraction]]:
    return [[Fraction(0), Fraction(0)] for _ in range(2 * n + 3)]


def _mul(f: list[list[Fraction]], g: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    h = _table(n)
    imax = 2 * n + 2
    for i1 in range(imax + 1):
        for j1 in range(2):
            c1 = f[i1][j1]
            if c1 == 0:
                continue
            for i2 in range(imax + 1 - i1):
                for j2 in range(2 - j1):
                    c2 = g[i2][j2]
                    if c2 == 0:
                        continue
                    h[i1 + i2][j1 + j2] += c1 * c2
    return h


def _series_power_in_x(coeffs: list[Fraction], exponent: int, n: int) -> list[list[Fraction]]:
    base = _table(n)
    base[0][0] = Fraction(1)
    for j in range(1, len(coeffs)):
        if 2 * j <= 2 * n + 2:
            base[2 * j][0] = coeffs[j]
    result = _table(n)
    result[0][0] = Fraction(1)
    for _ in range(exponent):
        result = _mul(result, base, n)
    return result


def s_value(n: int, k: int, l: int) -> Fraction:
    """s(k, l) for the circle bundle over CP^2n x CP^1, dense route."""
    order = n + 2
    qa = ahat_coefficients(order)
    ql = lgenus_coefficients(order)
    a = mixing(n + 1)

    A = _series_power_in_x(qa, 2 * n + 1, n)
    L = _series_power_in_x(ql, 2 * n + 1, n)

    c = _table(n)
    c[1][0] = Fraction(l)
    c[0][1] = Fraction(k)
    c2 = _mul(c, c, n)

    def euler_series(coeffs: list[Fraction]) -> list[list[Fraction]]:
        acc = _table(n)
        acc[0][0] = Fraction(1)
        power = _table(n)
        power[0][0] = Fraction(1)
        for j in range(1, order + 1):
            power = _mul(power, c2, n)
            for i in range(2 * n + 3):
                for jj in range(2):
                    acc[i][jj] += coeffs[j] * power[i][jj]
        return acc

    F1 = _mul(A, euler_series(qa), n)
    F2 = _mul(L, euler_series(ql), n)
    alpha = F1[2 * n + 2][0] + a * F2[2 * n + 2][0]
    beta = F1[2 * n + 1][1] + a * F2[2 * n + 1][1]
    # substitute: x^(2n+2)/c pairs to -k/l^2, x^(2n+1)*y/c pairs to 1/l
    paired = alpha * Fraction(-k, l * l) + beta * Fraction(1, l)
    return -paired

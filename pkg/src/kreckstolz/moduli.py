"""Structure of s(k, l) in the parameters, and what it says about moduli.

For fixed n, the map l -> s(k, l)/k is a single Laurent polynomial p(l) with
exponents in [-2, 2n]: the (1/c)-term contributes a rational multiple of
l^(-2) and the series tail a polynomial of degree 2n whose leading
coefficient is -(2n+1)(ahat_{2n+2} + a_{n+1} b_{2n+2}) != 0.  Consequently,
at any odd l0 with p(l0) != 0, the values |s(k, l0)| = k|p(l0)| are pairwise
distinct over even k, so the corresponding nonnegatively curved metrics on
diffeomorphic representatives land in pairwise distinct path components of
the moduli space.  Note that p does vanish at some odd points: l = 1 is a
root for every n computed here, so component tables must choose l0 with
p(l0) != 0 (l0 = 3 is the smallest for n <= 3).

p is recovered by exact interpolation: sample s(2, l)/2 at 2n+3 odd points,
multiply by l^2, interpolate the degree-(2n+2) polynomial over Q, and verify
the result at two held-out sample points and at a second k.  Over exact
rationals a verified interpolation in the known degree window is a proof.

Across different l, the bundles are told apart by cohomology alone: degree-4
integral cohomology of the total space is Z/l^2 (read off the presentation
by Smith normal form), giving pairwise distinct homotopy types.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .bernoulli import ahat_coeff, l_coeff, mixing_constant
from .invariant import BundleParams, s_invariant

__all__ = [
    "LaurentPoly",
    "s_laurent",
    "leading_coeff_check",
    "LeadingCoeffCheck",
    "ComponentRow",
    "ComponentTable",
    "component_table",
    "CohomologyPresentation",
    "homotopy_discriminator",
    "smith_normal_form",
    "vanishing_l_scan",
]


class LaurentPoly:
    """Laurent polynomial in one variable over Q, stored sparsely by exponent."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction | int] = ()):
        clean: dict[int, Fraction] = {}
        for e, c in dict(coeffs).items():
            c = Fraction(c)
            if c != 0:
                clean[int(e)] = c
        self._coeffs = clean

    def coefficient(self, exponent: int) -> Fraction:
        return self._coeffs.get(exponent, Fraction(0))

    def exponents(self) -> list[int]:
        return sorted(self._coeffs)

    def min_exponent(self) -> int:
        return min(self._coeffs) if self._coeffs else 0

    def max_exponent(self) -> int:
        return max(self._coeffs) if self._coeffs else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate(self, point: Fraction | int) -> Fraction:
        point = Fraction(point)
        if point == 0 and self.min_exponent() < 0:
            raise ZeroDivisionError("negative exponents cannot be evaluated at 0")
        return sum(
            (c * point ** e for e, c in self._coeffs.items()), start=Fraction(0)
        )

    def items(self):
        return iter(sorted(self._coeffs.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            if e == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*l^{e}")
        return " + ".join(parts)


def _interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Exact Lagrange interpolation; returns dense coefficients, low to high."""
    m = len(xs)
    coeffs = [Fraction(0)] * m
    for i in range(m):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(m):
            if j == i:
                continue
            basis = [Fraction(0)] + basis  # multiply by the variable
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for t in range(m):
            coeffs[t] += scale * basis[t]
    return coeffs


def _s_over_k(n: int, k: int, l: int) -> Fraction:
    return s_invariant(BundleParams(n=n, k=k, l=l)).s / k


@lru_cache(maxsize=None)
def s_laurent(n: int) -> LaurentPoly:
    """The Laurent polynomial p with s(k, l) = k * p(l), recovered exactly.

    Samples at k = 2 and the 2n+3 smallest positive odd l, interpolates
    l^2 * p(l) in its known degree window [0, 2n+2], then re-verifies at the
    next two odd sample points and at k = 4.  A holdout mismatch means a bug
    somewhere in the pipeline and raises ArithmeticError; it is not a
    recoverable condition.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    points = [2 * i + 1 for i in range(2 * n + 5)]
    fit, holdout = points[: 2 * n + 3], points[2 * n + 3 :]
    xs = [Fraction(l) for l in fit]
    ys = [Fraction(l) ** 2 * _s_over_k(n, 2, l) for l in fit]
    dense = _interpolate(xs, ys)
    poly = LaurentPoly({e - 2: c for e, c in enumerate(dense)})
    for l in holdout:
        if poly.evaluate(l) != _s_over_k(n, 2, l):
            raise ArithmeticError(
                f"Laurent interpolation for n={n} failed holdout check at l={l}"
            )
    for l in fit[:2] + holdout[:1]:
        if poly.evaluate(l) != _s_over_k(n, 4, l):
            raise ArithmeticError(
                f"Laurent interpolation for n={n} is not k-independent at l={l}"
            )
    return poly


@dataclass(frozen=True)
class LeadingCoeffCheck:
    """Comparison of the interpolated degree-2n coefficient with the closed
    form (2n+1) * (ahat_{2n+2} + a_{n+1} * b_{2n+2}), up to overall sign."""

    n: int
    laurent_coefficient: Fraction
    closed_form: Fraction
    matches: bool
    nonzero: bool


def leading_coeff_check(n: int) -> LeadingCoeffCheck:
    """Check the top coefficient of s_laurent(n) against its closed form."""
    lead = s_laurent(n).coefficient(2 * n)
    closed = (2 * n + 1) * (ahat_coeff(n + 1) + mixing_constant(n + 1) * l_coeff(n + 1))
    return LeadingCoeffCheck(
        n=n,
        laurent_coefficient=lead,
        closed_form=closed,
        matches=abs(lead) == abs(closed),
        nonzero=lead != 0,
    )


@dataclass(frozen=True)
class ComponentRow:
    n: int
    k: int
    l: int
    spin: bool
    s: Fraction
    abs_s: Fraction
    ek_mod1: Fraction


@dataclass(frozen=True)
class ComponentTable:
    """Rows sorted by (n, l, k) plus the count of distinct |s| values.

    When p(l) != 0 every row carries a different |s| = k * |p(l)|, so the
    distinct count equals the row count and each row certifies its own path
    component of the moduli space.
    """

    n: int
    l: int
    rows: tuple[ComponentRow, ...]
    distinct_abs_count: int = field(default=0)

    @property
    def all_distinct(self) -> bool:
        return self.distinct_abs_count == len(self.rows)


def component_table(n: int, l: int, k_range: Iterable[int]) -> ComponentTable:
    """Evaluate s over a sweep of even k at fixed odd l.

    Refuses when p(l) = 0: the distinctness argument needs a nonvanishing
    value, and a table of zeros would certify nothing.  (l = 1 is such a
    root for every n computed so far; the diagnostic suggests the smallest
    usable l.)
    """
    if l < 1 or l % 2 == 0:
        raise ValueError("l must be a positive odd integer")
    p = s_laurent(n)
    if p.evaluate(l) == 0:
        usable = next(
            (cand for cand in range(1, 200, 2) if p.evaluate(cand) != 0), None
        )
        raise ValueError(
            f"p({l}) = 0 at n={n}: |s(k,{l})| = 0 for all k, so distinct-component "
            f"counting is unavailable at this l"
            + (f"; smallest usable odd l is {usable}" if usable else "")
        )
    rows = []
    for k in sorted(set(k_range)):
        report = s_invariant(BundleParams(n=n, k=k, l=l))
        rows.append(
            ComponentRow(
                n=n,
                k=k,
                l=l,
                spin=report.spin,
                s=report.s,
                abs_s=abs(report.s),
                ek_mod1=report.ek_mod1,
            )
        )
    distinct = len({row.abs_s for row in rows})
    return ComponentTable(n=n, l=l, rows=tuple(rows), distinct_abs_count=distinct)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Elementary divisors of an integer matrix (nonnegative, divisibility
    chain d1 | d2 | ...), by the classical pivot reduction."""
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    divisors: list[int] = []
    top = 0
    while top < rows and top < cols:
        # find a pivot of minimal absolute value
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        dirty = False
        for i in range(top + 1, rows):
            q = a[i][top] // a[top][top]
            if q:
                for j in range(cols):
                    a[i][j] -= q * a[top][j]
            if a[i][top]:
                dirty = True
        for j in range(top + 1, cols):
            q = a[top][j] // a[top][top]
            if q:
                for i in range(rows):
                    a[i][j] -= q * a[i][top]
            if a[top][j]:
                dirty = True
        if dirty:
            continue  # residues remain; repeat with a smaller pivot
        divisors.append(abs(a[top][top]))
        top += 1
    # enforce the divisibility chain
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            if divisors[i] and divisors[j] % divisors[i]:
                g = math.gcd(divisors[i], divisors[j])
                divisors[j] = divisors[i] * divisors[j] // g
                divisors[i] = g
    return divisors


@dataclass(frozen=True)
class CohomologyPresentation:
    """Integral cohomology ring of M_{k,l}:
    Z[u, v] / ((l*v)^2, v^(2n+1), u*v^2, u^2), deg u = 4n+1, deg v = 2.

    Notably free of k, which is why varying k at fixed l keeps the homotopy
    type in a single finite family while |s| runs off to infinity.
    """

    n: int
    l: int

    @property
    def generator_degrees(self) -> dict[str, int]:
        return {"u": 4 * self.n + 1, "v": 2}

    @property
    def relation_degrees(self) -> dict[str, int]:
        return {
            "(l*v)^2": 4,
            "v^(2n+1)": 4 * self.n + 2,
            "u*v^2": 4 * self.n + 5,
            "u^2": 8 * self.n + 2,
        }

    def degree4_relation_matrix(self) -> list[list[int]]:
        """Relations landing in degree 4, in the monomial basis there.

        For n >= 1 the only degree-4 monomial is v^2 and the only relation of
        degree <= 4 is (l*v)^2 = l^2 * v^2, so the matrix is [[l^2]].
        Assembled from the presentation data rather than hard-coded.
        """
        basis = [
            (a, b)
            for a in range(2)
            for b in range(3)
            if a * (4 * self.n + 1) + 2 * b == 4
        ]
        rows = []
        if 4 == self.relation_degrees["(l*v)^2"]:
            rows.append([self.l ** 2 if (a, b) == (0, 2) else 0 for (a, b) in basis])
        for name, deg in self.relation_degrees.items():
            if name != "(l*v)^2" and deg == 4:  # impossible for n >= 1
                rows.append([0 for _ in basis])
        return rows

    def degree4_torsion_order(self) -> int:
        """Order of the degree-4 cohomology group Z/l^2, via Smith normal form."""
        divisors = smith_normal_form(self.degree4_relation_matrix())
        order = 1
        for d in divisors:
            if d:
                order *= d
        return order


def homotopy_discriminator(l: int, n: int) -> int:
    """l^2, the order of H^4 of the total space: distinct l, distinct spaces.

    Read off the cohomology presentation by Smith normal form rather than
    asserted, so the pipeline from presentation to invariant stays checkable.
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    return CohomologyPresentation(n=n, l=l).degree4_torsion_order()


def vanishing_l_scan(n: int, l_max: int) -> list[int]:
    """Odd l in [1, l_max] with p(l) = 0, by direct evaluation.

    A report on a scanned range only; no claim of completeness beyond it.
    """
    p = s_laurent(n)
    return [l for l in range(1, l_max + 1, 2) if p.evaluate(l) == 0]

"""Hirzebruch multiplicative sequences in abstract Pontrjagin variables.

An even power series Q(z) = 1 + q_2 z^2 + q_4 z^4 + ... defines, for every
weight m, a polynomial K_m(p_1, ..., p_m): write p_j as the j-th elementary
symmetric function of squares of formal roots, expand prod_i Q(z_i), and
re-express the weight-m homogeneous part in the p_j (m roots suffice).  For
Q = (z/2)/sinh(z/2) this yields the A-hat genus polynomials, for
Q = z/tanh(z) the L genus (signature) polynomials.

The combination K_m(ahat) + a_m * K_m(lgenus) with the mixing constant
a_m = 1/(2^(2m+1)(2^(2m-1)-1)) has vanishing p_m coefficient; that is the
defining property that makes it computable from a bordism whose top
Pontrjagin class is unknown.

The s-invariant pipeline proper works with concrete series on the base; this
module supplies the polynomial route, used as an independent cross-check and
exposed through the command line.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping

from .bernoulli import mixing_constant, series_coeff
from .cohomology import RingElement, x_class

__all__ = [
    "SymPolynomial",
    "genus_polynomial",
    "n_polynomial",
    "pontrjagin_classes_of_base",
    "genus_class_of_base",
]

# Partitions index Pontrjagin monomials: (2, 1, 1) means p_2 * p_1^2.
Partition = tuple[int, ...]


class SymPolynomial:
    """Homogeneous weight-m polynomial in p_1, ..., p_m with exact coefficients.

    Keys are partitions of m sorted in decreasing order; the key (j1, j2, ...)
    stands for the monomial p_{j1} * p_{j2} * ... (variable p_j has weight j,
    so every stored key sums to the weight).
    """

    __slots__ = ("weight", "_coeffs")

    def __init__(self, weight: int, coeffs: Mapping[Partition, Fraction | int] = ()):
        self.weight = weight
        clean: dict[Partition, Fraction] = {}
        for part, c in dict(coeffs).items():
            part = tuple(sorted(part, reverse=True))
            if sum(part) != weight:
                raise ValueError(f"partition {part} does not have weight {weight}")
            c = Fraction(c)
            if c != 0:
                clean[part] = clean.get(part, Fraction(0)) + c
        self._coeffs = {p: c for p, c in clean.items() if c != 0}

    def coefficient(self, partition: Partition) -> Fraction:
        return self._coeffs.get(tuple(sorted(partition, reverse=True)), Fraction(0))

    def top_coefficient(self) -> Fraction:
        """Coefficient of the single variable p_m of top weight."""
        return self.coefficient((self.weight,))

    def items(self):
        return iter(sorted(self._coeffs.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: SymPolynomial) -> SymPolynomial:
        if self.weight != other.weight:
            raise ValueError("cannot add polynomials of different weight")
        coeffs = dict(self._coeffs)
        for part, c in other._coeffs.items():
            coeffs[part] = coeffs.get(part, Fraction(0)) + c
        return SymPolynomial(self.weight, coeffs)

    def scale(self, scalar: Fraction | int) -> SymPolynomial:
        scalar = Fraction(scalar)
        return SymPolynomial(
            self.weight, {p: scalar * c for p, c in self._coeffs.items()}
        )

    def evaluate(self, values: Mapping[int, RingElement], n: int) -> RingElement:
        """Substitute ring classes for the p_j; absent entries mean p_j = 0."""
        total = RingElement.zero(n)
        for part, c in self._coeffs.items():
            term = RingElement.one(n)
            for j in part:
                value = values.get(j)
                if value is None:
                    term = RingElement.zero(n)
                    break
                term = term * value
            total = total + term.scale(c)
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        return self.weight == other.weight and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.weight, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for part, c in sorted(self._coeffs.items(), reverse=True):
            counts: dict[int, int] = {}
            for j in part:
                counts[j] = counts.get(j, 0) + 1
            mono = "*".join(
                f"p{j}^{e}" if e > 1 else f"p{j}" for j, e in sorted(counts.items())
            )
            sign = "-" if c < 0 else "+"
            pieces.append((sign, f"{abs(c)} * {mono}"))
        first_sign, first_term = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in pieces[1:]:
            text += f" {sign} {term}"
        return text


def _mul_trunc(f: dict, g: dict, m: int) -> dict:
    """Multiply polynomials in m root variables, dropping total degree > m."""
    h: dict[tuple[int, ...], Fraction] = {}
    for e1, c1 in f.items():
        d1 = sum(e1)
        for e2, c2 in g.items():
            if d1 + sum(e2) > m:
                continue
            e = tuple(a + b for a, b in zip(e1, e2))
            h[e] = h.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in h.items() if c != 0}


@lru_cache(maxsize=None)
def _elementary(m: int, j: int) -> tuple:
    """e_j in m variables, as a tuple of exponent tuples (coefficients 1)."""
    monos = []
    for idx in itertools.combinations(range(m), j):
        e = [0] * m
        for t in idx:
            e[t] = 1
        monos.append(tuple(e))
    return tuple(monos)


@lru_cache(maxsize=None)
def genus_polynomial(series: str, m: int) -> SymPolynomial:
    """Weight-m multiplicative-sequence polynomial of the named even series.

    Expands prod_{i=1..m} Q(beta_i) over m formal roots (beta_i stands for a
    squared root, so it has weight 1), keeps the weight-m part, and rewrites
    it in the elementary symmetric functions e_j = p_j by the classical
    leading-monomial elimination.
    """
    if m < 1:
        raise ValueError("weight m must be a positive integer")
    q = {j: series_coeff(series, j) for j in range(1, m + 1)}
    zero = (0,) * m
    product = {zero: Fraction(1)}
    for i in range(m):
        factor = {zero: Fraction(1)}
        for j in range(1, m + 1):
            e = [0] * m
            e[i] = j
            factor[tuple(e)] = q[j]
        product = _mul_trunc(product, factor, m)
    remainder = {e: c for e, c in product.items() if sum(e) == m}

    coeffs: dict[Partition, Fraction] = {}
    while remainder:
        lead = max(remainder)  # lex-largest exponent is already sorted decreasingly
        c = remainder[lead]
        lam = list(lead) + [0]
        partition: list[int] = []
        emono = {zero: Fraction(1)}
        for j in range(1, m + 1):
            for _ in range(lam[j - 1] - lam[j]):
                partition.append(j)
                emono = _mul_trunc(emono, {e: Fraction(1) for e in _elementary(m, j)}, m)
        key = tuple(sorted(partition, reverse=True))
        coeffs[key] = coeffs.get(key, Fraction(0)) + c
        for e, ce in emono.items():
            new = remainder.get(e, Fraction(0)) - c * ce
            if new == 0:
                remainder.pop(e, None)
            else:
                remainder[e] = new
    return SymPolynomial(m, coeffs)


@lru_cache(maxsize=None)
def n_polynomial(m: int) -> SymPolynomial:
    """The combination K_m(ahat) + a_m * K_m(lgenus); its p_m term cancels.

    >>> n_polynomial(1).is_zero()
    True
    >>> n_polynomial(2)
    1/896 * p1^2
    """
    return genus_polynomial("ahat", m) + genus_polynomial("lgenus", m).scale(
        mixing_constant(m)
    )


def pontrjagin_classes_of_base(n: int) -> dict[int, RingElement]:
    """Pontrjagin classes of B = CP^2n x CP^1: p(B) = (1 + x^2)^(2n+1).

    The CP^1 factor contributes (1 + y^2)^2 = 1 since y^2 = 0, so
    p_j(B) = C(2n+1, j) * x^(2j) for 1 <= j <= n+1 (higher ones die in the
    extended ring).
    """
    x2 = x_class(n) * x_class(n)
    classes: dict[int, RingElement] = {}
    power = RingElement.one(n)
    for j in range(1, n + 2):
        power = power * x2
        classes[j] = power.scale(comb(2 * n + 1, j))
    return classes


def genus_class_of_base(series: str, n: int) -> RingElement:
    """Total genus class of the tangent bundle of B via the polynomial route.

    Sums genus_polynomial(series, m) evaluated at the Pontrjagin classes of
    the base for every weight that survives the ring truncation (m <= n+1).
    Equal, by the splitting principle, to apply_even_series(series, x, 2n+1),
    but computed along an entirely different path.
    """
    classes = pontrjagin_classes_of_base(n)
    total = RingElement.one(n)
    for m in range(1, n + 2):
        total = total + genus_polynomial(series, m).evaluate(classes, n)
    return total

"""Exact arithmetic in the cohomology ring of B = CP^2n x CP^1, extended.

Rationally, H*(B) = Q[x, y]/(x^(2n+1), y^2) with both generators in degree 2.
The s-invariant computation has to divide a degree-(4n+4) class by the Euler
class c = l*x + k*y, and the quotient ring proper has no room for the
numerator: we therefore work in the *extended* ring

    Q[x, y] / (x^(2n+3), y^2)

which carries exponents up to x^(2n+2).  The extra monomials x^(2n+1),
x^(2n+2), x^(2n+1)*y pair to zero against the fundamental class, so nothing
geometric changes, but "divide by c, then pair" becomes a total operation:
the degree-(4n+4) part of any class is alpha*x^(2n+2) + beta*x^(2n+1)*y, and
c * (w1*x^(2n+1) + w2*x^(2n)*y) = l*w1*x^(2n+2) + (k*w1 + l*w2)*x^(2n+1)*y
gives the triangular system w1 = alpha/l, w2 = (beta - k*alpha/l)/l, solvable
exactly whenever l != 0.

A mod-2 companion ring F_2[x, y]/(x^(2n+1), y^2) carries total
Stiefel-Whitney classes.

Elements are immutable values; all operations return fresh elements.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .bernoulli import series_coeff

__all__ = [
    "RingElement",
    "Mod2Element",
    "x_class",
    "y_class",
    "euler_class",
    "apply_even_series",
    "divide_by_euler_and_pair",
    "pair_fundamental",
]


class RingElement:
    """Element of Q[x, y]/(x^(2n+3), y^2), stored sparsely.

    Coefficients map a monomial key ``(i, j)`` (meaning x^i * y^j, with
    0 <= i <= 2n+2 and 0 <= j <= 1) to a nonzero Fraction.  Monomial (i, j)
    has cohomological degree 2i + 2j.
    """

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Mapping[tuple[int, int], Fraction | int] = ()):
        if n < 1:
            raise ValueError("ring parameter n must be a positive integer")
        self.n = n
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in dict(coeffs).items():
            if not (0 <= i <= 2 * n + 2 and 0 <= j <= 1):
                raise ValueError(f"monomial x^{i}*y^{j} outside the ring for n={n}")
            c = Fraction(c)
            if c != 0:
                clean[(i, j)] = c
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> RingElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> RingElement:
        return cls(n, {(0, 0): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, i: int, j: int, coeff: Fraction | int = 1) -> RingElement:
        return cls(n, {(i, j): Fraction(coeff)})

    # -- inspection --------------------------------------------------------

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._coeffs.get((i, j), Fraction(0))

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def homogeneous_part(self, degree: int) -> RingElement:
        """The part of cohomological degree ``degree`` (= 2i + 2j)."""
        return RingElement(
            self.n,
            {m: c for m, c in self._coeffs.items() if 2 * m[0] + 2 * m[1] == degree},
        )

    def is_homogeneous_of_degree(self, degree: int) -> bool:
        return all(2 * i + 2 * j == degree for (i, j) in self._coeffs)

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: RingElement) -> None:
        if self.n != other.n:
            raise ValueError(f"ring mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other: RingElement) -> RingElement:
        self._check_compatible(other)
        coeffs = dict(self._coeffs)
        for m, c in other._coeffs.items():
            coeffs[m] = coeffs.get(m, Fraction(0)) + c
        return RingElement(self.n, coeffs)

    def __sub__(self, other: RingElement) -> RingElement:
        return self + (-other)

    def __neg__(self) -> RingElement:
        return RingElement(self.n, {m: -c for m, c in self._coeffs.items()})

    def __mul__(self, other: RingElement | Fraction | int) -> RingElement:
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        self._check_compatible(other)
        imax = 2 * self.n + 2
        coeffs: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i > imax or j > 1:
                    continue  # truncated away: x^(2n+3) = 0, y^2 = 0
                m = (i, j)
                coeffs[m] = coeffs.get(m, Fraction(0)) + c1 * c2
        return RingElement(self.n, coeffs)

    __rmul__ = __mul__

    def scale(self, scalar: Fraction | int) -> RingElement:
        scalar = Fraction(scalar)
        return RingElement(self.n, {m: scalar * c for m, c in self._coeffs.items()})

    def __pow__(self, exponent: int) -> RingElement:
        if exponent < 0:
            raise ValueError("negative powers are not defined in the ring")
        result = RingElement.one(self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        ordered = sorted(self._coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1]))
        for (i, j), c in ordered:
            mono = "*".join(
                ([f"x^{i}" if i > 1 else "x"] if i else [])
                + (["y"] if j else [])
            )
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def x_class(n: int) -> RingElement:
    """Positive degree-2 generator pulled back from CP^2n."""
    return RingElement.monomial(n, 1, 0)


def y_class(n: int) -> RingElement:
    """Positive degree-2 generator pulled back from CP^1."""
    return RingElement.monomial(n, 0, 1)


def euler_class(k: int, l: int, n: int) -> RingElement:
    """Euler class c = l*x + k*y of the circle bundle with parameters (k, l).

    Plain constructor: no coprimality or parity constraints are enforced
    here; those belong to the bundle-parameter layer.
    """
    return RingElement(n, {(1, 0): Fraction(l), (0, 1): Fraction(k)})


def apply_even_series(series: str, class2: RingElement, exponent: int) -> RingElement:
    """Evaluate (1 + sum_{j>=1} q_{2j} z^(2j))^exponent at z = ``class2``.

    ``series`` selects the coefficient family ("ahat" or "lgenus") and
    ``class2`` must be homogeneous of cohomological degree 2, so each term
    q_{2j} * class2^(2j) sits in degree 4j.  The sum stops by itself once
    powers of ``class2`` die in the truncated ring.
    """
    if exponent < 0:
        raise ValueError("series exponent must be nonnegative")
    if not class2.is_homogeneous_of_degree(2):
        raise ValueError("series argument must be homogeneous of degree 2")
    base = RingElement.one(class2.n)
    square = class2 * class2
    power = RingElement.one(class2.n)
    j = 0
    while True:
        j += 1
        power = power * square
        if power.is_zero():
            break
        base = base + power.scale(series_coeff(series, j))
    return base ** exponent


def divide_by_euler_and_pair(element: RingElement, k: int, l: int) -> Fraction:
    """Pair (1/c) * element against the fundamental class of B.

    Only the degree-(4n+4) part alpha*x^(2n+2) + beta*x^(2n+1)*y of
    ``element`` contributes.  Its exact quotient by c = l*x + k*y is
    w1*x^(2n+1) + w2*x^(2n)*y with w1 = alpha/l and w2 = (beta - k*w1)/l,
    and the pairing picks out w2.  Requires l != 0 (multiplication by c is
    injective on degree 4n+2 exactly when l != 0).
    """
    if l == 0:
        raise ZeroDivisionError(
            "division by the Euler class needs l != 0 "
            "(for l = 0 multiplication by c is not injective)"
        )
    n = element.n
    alpha = element.coefficient(2 * n + 2, 0)
    beta = element.coefficient(2 * n + 1, 1)
    w1 = alpha / l
    w2 = (beta - k * w1) / l
    return w2


def pair_fundamental(element: RingElement) -> Fraction:
    """Coefficient of x^(2n)*y, i.e. the pairing with the fundamental class.

    The extended-ring monomials x^(2n+1), x^(2n+2) and x^(2n+1)*y vanish in
    H*(B) and therefore pair to zero.
    """
    return element.coefficient(2 * element.n, 1)


class Mod2Element:
    """Element of F_2[x, y]/(x^(2n+1), y^2); the support set is the data.

    Integer coefficients are reduced mod 2 on the way in, so the class
    (1 + l*x)^2 can be entered with its integer coefficients directly.
    """

    __slots__ = ("n", "_support")

    def __init__(self, n: int, coeffs: Mapping[tuple[int, int], int] = ()):
        if n < 1:
            raise ValueError("ring parameter n must be a positive integer")
        self.n = n
        support = set()
        for (i, j), c in dict(coeffs).items():
            if not (0 <= i <= 2 * n and 0 <= j <= 1):
                raise ValueError(f"monomial x^{i}*y^{j} outside the mod-2 ring for n={n}")
            if c % 2:
                support.add((i, j))
        self._support = frozenset(support)

    @classmethod
    def one(cls, n: int) -> Mod2Element:
        return cls(n, {(0, 0): 1})

    def support(self) -> frozenset[tuple[int, int]]:
        return self._support

    def is_zero(self) -> bool:
        return not self._support

    def homogeneous_part(self, degree: int) -> Mod2Element:
        return Mod2Element(
            self.n, {m: 1 for m in self._support if 2 * m[0] + 2 * m[1] == degree}
        )

    def __add__(self, other: Mod2Element) -> Mod2Element:
        if self.n != other.n:
            raise ValueError(f"ring mismatch: n={self.n} vs n={other.n}")
        return Mod2Element(self.n, {m: 1 for m in self._support ^ other._support})

    def __mul__(self, other: Mod2Element) -> Mod2Element:
        if self.n != other.n:
            raise ValueError(f"ring mismatch: n={self.n} vs n={other.n}")
        imax = 2 * self.n
        acc: set[tuple[int, int]] = set()
        for (i1, j1) in self._support:
            for (i2, j2) in other._support:
                i, j = i1 + i2, j1 + j2
                if i > imax or j > 1:
                    continue
                acc ^= {(i, j)}
        return Mod2Element(self.n, {m: 1 for m in acc})

    def __pow__(self, exponent: int) -> Mod2Element:
        if exponent < 0:
            raise ValueError("negative powers are not defined in the ring")
        result = Mod2Element.one(self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mod2Element):
            return NotImplemented
        return self.n == other.n and self._support == other._support

    def __hash__(self) -> int:
        return hash((self.n, self._support))

    def __repr__(self) -> str:
        if not self._support:
            return "0"
        parts = []
        for (i, j) in sorted(self._support, key=lambda m: (m[0] + m[1], m[1])):
            mono = "*".join(
                ([f"x^{i}" if i > 1 else "x"] if i else []) + (["y"] if j else [])
            )
            parts.append(mono if mono else "1")
        return " + ".join(parts)

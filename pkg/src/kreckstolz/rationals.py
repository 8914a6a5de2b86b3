"""Exact rational scalars and their canonical string form.

Every number in this package is a :class:`fractions.Fraction`: immutable,
arbitrary precision, and automatically kept in lowest terms with a positive
denominator.  The wire format is the canonical string ``"p/q"`` (or just
``"p"`` for integers) with the sign on the numerator.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["Rational", "format_rational", "parse_rational"]

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def format_rational(value: Fraction | int) -> str:
    """Render an exact value as ``"p/q"`` (``"p"`` when the denominator is 1).

    >>> format_rational(Fraction(-6, 8))
    '-3/4'
    >>> format_rational(Fraction(5))
    '5'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the canonical ``"p/q"`` form back into a Fraction.

    Rejects anything outside the canonical grammar (no whitespace, no sign on
    the denominator, no zero denominator).  The parsed value is reduced, so
    ``parse_rational(format_rational(x)) == x`` for every Fraction ``x``.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a canonical rational string: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)

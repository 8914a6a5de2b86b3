"""Arithmetic in the extended cohomology ring of CP^2n x CP^1.

Shows the truncation relations, the Euler class, and the one nontrivial
move the whole computation rests on: dividing a top-degree class by the
Euler class and pairing with the fundamental class.
"""

from fractions import Fraction

from kreckstolz import (
    RingElement,
    divide_by_euler_and_pair,
    euler_class,
    pair_fundamental,
    x_class,
    y_class,
)

n, k, l = 1, 2, 3
x, y = x_class(n), y_class(n)
c = euler_class(k, l, n)
print(f"n = {n}: ring Q[x, y]/(x^{2*n+3}, y^2), Euler class c = {c!r}")

print("\ntruncation at work:")
print(f"  y * y = {y * y!r}")
print(f"  x^{2*n+2} * x = {RingElement.monomial(n, 2*n+2, 0) * x!r}")
print(f"  (x + y)(x - y) = {(x + y) * (x - y)!r}   (y^2 = 0)")

print("\nthe key identity l^2 * x^2 = c * (l*x - k*y):")
lhs = (x * x).scale(l * l)
rhs = c * (x.scale(l) - y.scale(k))
print(f"  lhs = {lhs!r}")
print(f"  rhs = {rhs!r}")
assert lhs == rhs

print("\ndivide-and-pair: <(1/c) * F, [B]> for degree-(4n+4) classes F")
w = RingElement(n, {(2 * n + 1, 0): Fraction(5, 7), (2 * n, 1): Fraction(4, 11)})
print(f"  take w with x^{2*n}y-coefficient {w.coefficient(2*n, 1)}")
print(f"  divide_by_euler_and_pair(c * w) = {divide_by_euler_and_pair(c * w, k, l)}")
print(f"  divide_by_euler_and_pair(x^{2*n+2}) = {divide_by_euler_and_pair(RingElement.monomial(n, 2*n+2, 0), k, l)}  (= -k/l^2)")

print("\npairing against [B] picks the x^(2n)y coefficient:")
f = RingElement.monomial(n, 2 * n, 1, 5) + RingElement.monomial(n, 1, 0, 7)
print(f"  <5*x^{2*n}y + 7*x, [B]> = {pair_fundamental(f)}")

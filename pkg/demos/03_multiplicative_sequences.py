"""Genus polynomials in Pontrjagin classes, and the cancellation that makes
the whole invariant computable.

The A-hat and L genus polynomials both contain the top class p_m, which is
not available on a bordism with boundary.  Mixed with the right constant,
the p_m terms cancel exactly.
"""

from kreckstolz import (
    apply_even_series,
    genus_class_of_base,
    genus_polynomial,
    mixing_constant,
    n_polynomial,
    x_class,
)

print("genus polynomials in p_1, ..., p_m:")
for m in range(1, 5):
    print(f"  A-hat_{m} = {genus_polynomial('ahat', m)!r}")
    print(f"  L_{m}     = {genus_polynomial('lgenus', m)!r}")

print("\nmixed combination N_m = A-hat_m + a_m * L_m (no p_m left):")
for m in range(1, 5):
    nm = n_polynomial(m)
    print(f"  a_{m} = {mixing_constant(m)!s:>10}   N_{m} = {nm!r}")
    assert nm.top_coefficient() == 0

print("\nsplitting-principle consistency on the base B = CP^2n x CP^1:")
for n in (1, 2):
    direct = apply_even_series("ahat", x_class(n), 2 * n + 1)
    via_polynomials = genus_class_of_base("ahat", n)
    print(f"  n = {n}: series power == polynomial route: {direct == via_polynomials}")
    assert direct == via_polynomials

"""From exact s-values to moduli-space statements.

s(k, l)/k is a single Laurent polynomial p(l) per dimension.  Wherever
p(l) != 0, the values |s(k, l)| = k|p(l)| are pairwise distinct over even k,
and each one certifies its own path component of the moduli space of
nonnegatively curved metrics.  Watch the honest subtlety: p(1) = 0, so l = 1
certifies nothing and the machinery says so.
"""

from kreckstolz import (
    component_table,
    homotopy_discriminator,
    leading_coeff_check,
    s_laurent,
    vanishing_l_scan,
)

for n in (1, 2, 3):
    p = s_laurent(n)
    check = leading_coeff_check(n)
    print(f"n = {n}:  p(l) = {p!r}")
    print(
        f"         exponents in [{p.min_exponent()}, {p.max_exponent()}], "
        f"leading coefficient {check.laurent_coefficient} "
        f"(closed form {check.closed_form}, match up to sign: {check.matches})"
    )
    print(f"         odd roots of p up to 99: {vanishing_l_scan(n, 99)}")

print("\ncomponent table at n = 1, l = 3 (smallest l with p(l) != 0):")
ks = [k for k in range(2, 21, 2) if k % 3 != 0]  # k must stay coprime to l
table = component_table(1, 3, ks)
print("  k:  s        |s|      ek_mod1")
for row in table.rows:
    print(f"  {row.k:>2}: {row.s!s:>8} {row.abs_s!s:>8} {row.ek_mod1!s:>9}")
print(f"  distinct |s| values: {table.distinct_abs_count} of {len(table.rows)} rows")

print("\nl = 1 is refused, with a pointer to a usable l:")
try:
    component_table(1, 1, [2, 4, 6])
except ValueError as exc:
    print(f"  {exc}")

print("\ndistinct l give distinct homotopy types (degree-4 torsion order l^2):")
for l in (1, 3, 5, 7, 9):
    print(f"  l = {l}: |H^4| = {homotopy_discriminator(l, 1)}")

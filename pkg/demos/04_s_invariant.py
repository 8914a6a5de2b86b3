"""Exact s-invariants of the bundles M_{k,l}.

Each evaluation runs two independent pipelines (direct series powers, and
multiplicative-sequence polynomials on the base) and refuses to return if
they disagree.  The report also carries the spin check, the vanishing
signature term, and both Eells-Kuiper style mod-1 reductions.
"""

from kreckstolz import BundleParams, is_spin, s_invariant, sw_total_W

for n, k, l in [(1, 2, 3), (1, 4, 3), (1, 2, 5), (2, 2, 3), (3, 2, 3)]:
    report = s_invariant(BundleParams(n=n, k=k, l=l))
    print(
        f"n={n} k={k} l={l} (dim {4*n+3}):  s = {report.s!s:>15}   "
        f"|s| = {abs(report.s)!s:>14}   ek_mod1 = {report.ek_mod1}"
    )

print("\nlinearity in k at fixed l (here n=1, l=3):")
base = s_invariant(BundleParams(n=1, k=2, l=3)).s
for k in (2, 4, 8, 10):
    value = s_invariant(BundleParams(n=1, k=k, l=3)).s
    print(f"  s({k},3) = {value}  = {k}/2 * s(2,3): {value == k * base / 2}")

print("\nspin detection through the full Stiefel-Whitney expansion:")
for k, l in [(2, 1), (1, 2), (4, 3), (3, 4)]:
    w2 = sw_total_W(k, l, 1).homogeneous_part(2)
    print(f"  k={k}, l={l}: M spin = {is_spin(k, l, 1)},  w_2(W) = {w2!r}")

print("\nparameter validation lives in BundleParams:")
for bad in (dict(n=1, k=3, l=2), dict(n=1, k=2, l=2)):
    try:
        BundleParams(**bad)
    except ValueError as exc:
        print(f"  {bad} -> {exc}")

"""Self-contained property suites behind the ``verify`` CLI command.

Each check raises AssertionError with a readable message on failure and
returns quietly on success; :func:`run_all` turns that into a list of
results.  Randomized checks use fixed seeds so that two runs of ``verify``
are byte-identical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bernoulli import ahat_coeff, bernoulli_unsigned, l_coeff, mixing_constant
from .cohomology import (
    RingElement,
    apply_even_series,
    divide_by_euler_and_pair,
    euler_class,
    x_class,
)
from .genera import genus_polynomial, n_polynomial, pontrjagin_classes_of_base
from .invariant import (
    BundleParams,
    eells_kuiper_mod1,
    is_spin,
    s_invariant,
    signature_Bc,
)
from .moduli import homotopy_discriminator, s_laurent, vanishing_l_scan
from .rationals import format_rational, parse_rational

__all__ = ["CheckResult", "ALL_CHECKS", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-99, 99), rng.randint(1, 40))


def check_rational_canonical_form(n_max: int) -> None:
    """Every arithmetic result is reduced with a positive denominator, and
    the string form round-trips exactly."""
    rng = random.Random(101)
    for _ in range(300):
        a, b = _random_fraction(rng), _random_fraction(rng)
        for value in (a + b, a - b, a * b) + ((a / b,) if b else ()):
            assert value.denominator >= 1, f"nonpositive denominator in {value!r}"
            assert math.gcd(abs(value.numerator), value.denominator) == 1, (
                f"unreduced value {value!r}"
            )
            assert parse_rational(format_rational(value)) == value, (
                f"string round-trip failed for {value!r}"
            )


def check_rational_field_laws(n_max: int) -> None:
    """Commutativity, distributivity and exact division on random inputs."""
    rng = random.Random(202)
    for _ in range(300):
        a, b, c = (_random_fraction(rng) for _ in range(3))
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        if b != 0:
            assert (a / b) * b == a


def check_bernoulli_positive(n_max: int) -> None:
    """Unsigned Bernoulli numbers are strictly positive."""
    for j in range(1, 15):
        assert bernoulli_unsigned(j) > 0, f"B_{j} not positive"


def check_series_relation(n_max: int) -> None:
    """ahat_{2j} = (1 - 2^(2j-1))/2^(4j-1) * b_{2j} exactly for j = 1..12."""
    for j in range(1, 13):
        lhs = ahat_coeff(j)
        rhs = Fraction(1 - 2 ** (2 * j - 1), 2 ** (4 * j - 1)) * l_coeff(j)
        assert lhs == rhs, f"series relation fails at j={j}: {lhs} != {rhs}"


def _random_element(rng: random.Random, n: int, degree: int | None = None) -> RingElement:
    coeffs = {}
    for i in range(2 * n + 3):
        for j in range(2):
            if degree is not None and 2 * i + 2 * j != degree:
                continue
            if rng.random() < 0.7:
                coeffs[(i, j)] = _random_fraction(rng)
    return RingElement(n, coeffs)


def check_euler_division_roundtrip(n_max: int) -> None:
    """divide_by_euler_and_pair(c * w) recovers the x^(2n)*y coefficient of w
    for 1000 random degree-(4n+2) classes w per n."""
    rng = random.Random(303)
    for n in range(1, min(n_max, 3) + 1):
        for _ in range(1000):
            l = rng.choice([e for e in range(-9, 10) if e != 0])
            k = rng.randint(-9, 9)
            w = RingElement(
                n,
                {
                    (2 * n + 1, 0): _random_fraction(rng),
                    (2 * n, 1): _random_fraction(rng),
                },
            )
            expected = w.coefficient(2 * n, 1)
            got = divide_by_euler_and_pair(euler_class(k, l, n) * w, k, l)
            assert got == expected, f"round trip failed at n={n}, k={k}, l={l}"


def check_euler_divisibility_identity(n_max: int) -> None:
    """l^2 * x^2 = c * (l*x - k*y) holds exactly in the ring."""
    rng = random.Random(404)
    for n in range(1, min(n_max, 3) + 1):
        x = x_class(n)
        for _ in range(50):
            k = rng.randint(-20, 20)
            l = rng.randint(-20, 20)
            c = euler_class(k, l, n)
            lhs = (x * x).scale(l * l)
            rhs = c * RingElement(n, {(1, 0): Fraction(l), (0, 1): Fraction(-k)})
            assert lhs == rhs, f"divisibility identity fails at n={n}, k={k}, l={l}"


def check_euler_injectivity(n_max: int) -> None:
    """For l != 0, multiplication by c is injective on degree 4n+2."""
    rng = random.Random(505)
    for n in range(1, min(n_max, 3) + 1):
        for _ in range(200):
            l = rng.choice([e for e in range(-9, 10) if e != 0])
            k = rng.randint(-9, 9)
            w = _random_element(rng, n, degree=4 * n + 2)
            if w.is_zero():
                continue
            assert not (euler_class(k, l, n) * w).is_zero(), (
                f"c * w = 0 for nonzero w at n={n}, k={k}, l={l}"
            )


def _untruncated_product(f: RingElement, g: RingElement) -> dict:
    h: dict[tuple[int, int], Fraction] = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            key = (i1 + i2, j1 + j2)
            h[key] = h.get(key, Fraction(0)) + c1 * c2
    return {key: c for key, c in h.items() if c != 0}


def check_truncation_consistency(n_max: int) -> None:
    """The degree <= 4n+4 part of a product does not change if the factors
    are multiplied without any exponent cap first (y^2 = 0 still applies)."""
    rng = random.Random(606)
    for n in range(1, min(n_max, 3) + 1):
        for _ in range(50):
            f = _random_element(rng, n)
            g = _random_element(rng, n)
            truncated = f * g
            free = _untruncated_product(f, g)
            for (i, j), c in free.items():
                if j > 1 or 2 * i + 2 * j > 4 * n + 4:
                    continue
                assert truncated.coefficient(i, j) == c, (
                    f"truncation changed coefficient of x^{i}y^{j} at n={n}"
                )
            for (i, j), c in truncated.items():
                if 2 * i + 2 * j <= 4 * n + 4:
                    assert free.get((i, j), Fraction(0)) == c


def check_n_polynomial_property(n_max: int) -> None:
    """The p_m coefficient of the mixed genus combination vanishes, m = 1..5,
    with the closed small cases coming out exactly."""
    for m in range(1, 6):
        nm = n_polynomial(m)
        assert nm.top_coefficient() == 0, f"p_{m} survives in the combination"
    assert n_polynomial(1).is_zero(), "weight-1 combination should vanish entirely"
    n2 = n_polynomial(2)
    assert n2.coefficient((1, 1)) == Fraction(1, 896), "weight-2 value drifted"
    assert len(list(n2.items())) == 1


def check_whitney_multiplicativity(n_max: int) -> None:
    """K_2 of a Whitney sum equals the weight-2 part of the product of the
    factors' genus classes, symbolically in two abstract summands."""
    # polynomials in p1', p2', p1'', p2'' as exponent-tuple -> Fraction
    def mul(f: dict, g: dict) -> dict:
        h: dict[tuple[int, int, int, int], Fraction] = {}
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                h[e] = h.get(e, Fraction(0)) + c1 * c2
        return {e: c for e, c in h.items() if c != 0}

    def add(f: dict, g: dict) -> dict:
        h = dict(f)
        for e, c in g.items():
            h[e] = h.get(e, Fraction(0)) + c
        return {e: c for e, c in h.items() if c != 0}

    p1a = {(1, 0, 0, 0): Fraction(1)}
    p2a = {(0, 1, 0, 0): Fraction(1)}
    p1b = {(0, 0, 1, 0): Fraction(1)}
    p2b = {(0, 0, 0, 1): Fraction(1)}
    whitney_p1 = add(p1a, p1b)
    whitney_p2 = add(add(p2a, p2b), mul(p1a, p1b))

    for series in ("ahat", "lgenus"):
        k1 = genus_polynomial(series, 1)
        k2 = genus_polynomial(series, 2)

        def expand(poly, p1, p2):
            total: dict = {}
            for part, c in poly.items():
                term = {(0, 0, 0, 0): Fraction(1)}
                for j in part:
                    term = mul(term, p1 if j == 1 else p2)
                total = add(total, {e: c * v for e, v in term.items()})
            return total

        lhs = expand(k2, whitney_p1, whitney_p2)
        rhs = add(
            add(expand(k2, p1a, p2a), expand(k2, p1b, p2b)),
            mul(expand(k1, p1a, p2a), expand(k1, p1b, p2b)),
        )
        assert lhs == rhs, f"Whitney multiplicativity fails for {series} at weight 2"


def check_genus_vs_series_on_base(n_max: int) -> None:
    """genus_polynomial evaluated at p(B) reproduces each homogeneous piece
    of the direct series power (x/2 / sinh(x/2))^(2n+1), and likewise for
    the signature series."""
    for n in range(1, min(n_max, 3) + 1):
        classes = pontrjagin_classes_of_base(n)
        for series in ("ahat", "lgenus"):
            direct = apply_even_series(series, x_class(n), 2 * n + 1)
            for j in range(1, n + 2):
                via_poly = genus_polynomial(series, j).evaluate(classes, n)
                assert via_poly == direct.homogeneous_part(4 * j), (
                    f"{series} weight {j} disagrees with the series on the base, n={n}"
                )


def check_route_agreement(n_max: int) -> None:
    """Series route and polynomial route agree over the standard grid."""
    for n in range(1, n_max + 1):
        for l in range(1, 10, 2):
            for k in range(2, 21, 2):
                if math.gcd(k, l) != 1:
                    continue
                report = s_invariant(BundleParams(n=n, k=k, l=l))
                assert report.s == report.t_w, (
                    f"route disagreement at n={n}, k={k}, l={l}"
                )


def check_k_linearity(n_max: int) -> None:
    """s(k, l) * k' = s(k', l) * k exactly across the grid."""
    for n in range(1, n_max + 1):
        for l in range(1, 10, 2):
            ks = [k for k in range(2, 21, 2) if math.gcd(k, l) == 1]
            values = {k: s_invariant(BundleParams(n=n, k=k, l=l)).s for k in ks}
            for k in ks:
                for kp in ks:
                    assert values[k] * kp == values[kp] * k, (
                        f"k-linearity fails at n={n}, l={l}, k={k}, k'={kp}"
                    )


def check_spin_parity(n_max: int) -> None:
    """Spin detection through the full Stiefel-Whitney expansion matches the
    parity of k on all coprime pairs k, l <= 50."""
    for n in range(1, min(n_max, 3) + 1):
        for k in range(1, 51):
            for l in range(1, 51):
                if math.gcd(k, l) != 1:
                    continue
                assert is_spin(k, l, n) == (k % 2 == 0), (
                    f"spin parity mismatch at n={n}, k={k}, l={l}"
                )


def check_signature_vanishes(n_max: int) -> None:
    """The twisted-form signature vanishes whenever l != 0."""
    for k in range(-30, 31):
        for l in range(-30, 31):
            if l == 0:
                continue
            assert signature_Bc(k, l) == 0, f"signature nonzero at k={k}, l={l}"
    assert signature_Bc(2, 0) == 1
    assert signature_Bc(-2, 0) == -1
    assert signature_Bc(0, 0) == 0


def check_ek_reduction(n_max: int) -> None:
    """Mod-1 reductions land in [0, 1) and ignore integer shifts."""
    samples = [Fraction(0), Fraction(7, 3), Fraction(-7, 3), Fraction(22, 7),
               Fraction(-1, 2), Fraction(5), Fraction(-1139, 1140)]
    for v in samples:
        r = eells_kuiper_mod1(v)
        assert 0 <= r < 1, f"reduction out of range for {v}"
        for shift in (-3, -1, 1, 2, 10):
            assert eells_kuiper_mod1(v + shift) == r, (
                f"integer shift changed the reduction at {v} + {shift}"
            )


def check_laurent_interpolation(n_max: int) -> None:
    """p(l) matches s(k, l)/k for k in {2, 4} at the small odd sample grid."""
    for n in range(1, min(n_max, 3) + 1):
        p = s_laurent(n)
        for l in (1, 3, 5, 7, 9, 11):
            for k in (2, 4):
                direct = s_invariant(BundleParams(n=n, k=k, l=l)).s / k
                assert p.evaluate(l) == direct, (
                    f"interpolated value differs from s({k},{l})/{k} at n={n}"
                )


def check_laurent_degree_window(n_max: int) -> None:
    """Exponents of p stay inside [-2, 2n] and the top coefficient is nonzero."""
    for n in range(1, n_max + 1):
        p = s_laurent(n)
        assert p.min_exponent() >= -2, f"exponent below -2 at n={n}"
        assert p.max_exponent() <= 2 * n, f"exponent above 2n at n={n}"
        assert p.coefficient(2 * n) != 0, f"degree-2n coefficient vanishes at n={n}"
        lead = (2 * n + 1) * (ahat_coeff(n + 1) + mixing_constant(n + 1) * l_coeff(n + 1))
        assert abs(p.coefficient(2 * n)) == abs(lead), (
            f"leading coefficient differs from closed form at n={n}"
        )


def check_distinct_components(n_max: int) -> None:
    """At the smallest odd l0 with p(l0) != 0, the first 100 admissible even
    k give pairwise distinct |s(k, l0)|.  (l = 1 is a root of p for every n
    computed here, so it cannot serve as l0.)"""
    for n in range(1, min(n_max, 3) + 1):
        p = s_laurent(n)
        l0 = next(l for l in range(1, 200, 2) if p.evaluate(l) != 0)
        ks = [k for k in range(2, 1000, 2) if math.gcd(k, l0) == 1][:100]
        values = [abs(s_invariant(BundleParams(n=n, k=k, l=l0)).s) for k in ks]
        assert len(set(values)) == len(values), (
            f"|s| values collide at n={n}, l0={l0}"
        )


def check_discriminator(n_max: int) -> None:
    """The degree-4 torsion order is l^2: strictly increasing in l and
    independent of n."""
    previous = 0
    for l in range(1, 21):
        orders = {homotopy_discriminator(l, n) for n in range(1, max(n_max, 2) + 1)}
        assert len(orders) == 1, f"discriminator depends on n at l={l}"
        order = orders.pop()
        assert order == l * l, f"unexpected torsion order {order} at l={l}"
        assert order > previous, f"discriminator not increasing at l={l}"
        previous = order


def check_l1_vanishing(n_max: int) -> None:
    """Documented fact: p(1) = 0 for every n in range, so component tables
    must pick a different odd l."""
    for n in range(1, n_max + 1):
        roots = vanishing_l_scan(n, 1)
        assert roots == [1], f"expected p(1) = 0 at n={n}"


ALL_CHECKS: list[tuple[str, Callable[[int], None]]] = [
    ("rational-canonical-form", check_rational_canonical_form),
    ("rational-field-laws", check_rational_field_laws),
    ("bernoulli-positive", check_bernoulli_positive),
    ("series-relation", check_series_relation),
    ("euler-division-roundtrip", check_euler_division_roundtrip),
    ("euler-divisibility-identity", check_euler_divisibility_identity),
    ("euler-injectivity", check_euler_injectivity),
    ("truncation-consistency", check_truncation_consistency),
    ("mixed-genus-top-term", check_n_polynomial_property),
    ("whitney-multiplicativity", check_whitney_multiplicativity),
    ("genus-vs-series-on-base", check_genus_vs_series_on_base),
    ("route-agreement", check_route_agreement),
    ("k-linearity", check_k_linearity),
    ("spin-parity", check_spin_parity),
    ("signature-vanishes", check_signature_vanishes),
    ("ek-reduction", check_ek_reduction),
    ("laurent-interpolation", check_laurent_interpolation),
    ("laurent-degree-window", check_laurent_degree_window),
    ("distinct-components", check_distinct_components),
    ("homotopy-discriminator", check_discriminator),
    ("l1-vanishing", check_l1_vanishing),
]


def run_all(n_max: int) -> list[CheckResult]:
    """Run every suite up to the bound; failures are collected, not raised."""
    results = []
    for name, fn in ALL_CHECKS:
        try:
            fn(n_max)
        except AssertionError as exc:
            results.append(CheckResult(name=name, ok=False, detail=str(exc)))
        except Exception as exc:  # a crashed suite is a failed suite
            results.append(CheckResult(name=name, ok=False, detail=repr(exc)))
        else:
            results.append(CheckResult(name=name, ok=True, detail=""))
    return results

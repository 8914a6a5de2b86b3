"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
happen (pytest shows them for failing tests regardless).  Stated time
budgets are asserted where a criterion carries one; the exact-arithmetic
pipeline sits far below all of them.
"""

import math
import random
import time
from fractions import Fraction

from kreckstolz import (
    BundleParams,
    RingElement,
    ahat_coeff,
    bernoulli_unsigned,
    divide_by_euler_and_pair,
    euler_class,
    is_spin,
    l_coeff,
    mixing_constant,
    n_polynomial,
    s_invariant,
    s_laurent,
    x_class,
    y_class,
)

import dense_oracle
import newton_oracle


def _record(num: int, ok: bool, detail: str) -> None:
    print(f"acceptance criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_1_bernoulli_values():
    expected = [
        Fraction(1, 6),
        Fraction(1, 30),
        Fraction(1, 42),
        Fraction(1, 30),
        Fraction(5, 66),
    ]
    got = [bernoulli_unsigned(j) for j in range(1, 6)]
    ok = got == expected
    _record(1, ok, f"B_1..B_5 = {[str(v) for v in got]}")
    assert ok


def test_criterion_2_series_relation():
    mismatches = [
        j
        for j in range(1, 13)
        if ahat_coeff(j) != Fraction(1 - 2 ** (2 * j - 1), 2 ** (4 * j - 1)) * l_coeff(j)
    ]
    _record(2, not mismatches, "ahat/b relation exact for j = 1..12")
    assert not mismatches


def test_criterion_3_mixed_genus_combination():
    start = time.perf_counter()
    problems = []
    for m in range(1, 6):
        if n_polynomial(m).top_coefficient() != 0:
            problems.append(f"p_{m} survives at weight {m}")
    if not n_polynomial(1).is_zero():
        problems.append("weight-1 combination nonzero")
    # weight-2 value re-derived through the independent Newton-identity route
    qa = dense_oracle.ahat_coefficients(2)
    ql = dense_oracle.lgenus_coefficients(2)
    expected = dict(newton_oracle.genus_weight_part(qa, 2))
    for part, c in newton_oracle.genus_weight_part(ql, 2).items():
        expected[part] = expected.get(part, Fraction(0)) + dense_oracle.mixing(2) * c
    expected = {part: c for part, c in expected.items() if c != 0}
    if expected != {(1, 1): Fraction(1, 896)}:
        problems.append(f"oracle weight-2 combination unexpected: {expected}")
    if dict(n_polynomial(2).items()) != expected:
        problems.append("weight-2 combination differs from oracle")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 5.0
    _record(3, ok, f"p_m-free for m = 1..5, N_2 = p1^2/896 ({elapsed:.2f}s)")
    assert not problems, problems
    assert elapsed < 5.0


def test_criterion_4_route_agreement():
    start = time.perf_counter()
    count = 0
    for n in (1, 2, 3):
        for l in range(1, 10, 2):
            for k in range(2, 21, 2):
                if math.gcd(k, l) != 1:
                    continue
                report = s_invariant(BundleParams(n=n, k=k, l=l))
                assert report.s == report.t_w, f"routes disagree at n={n}, k={k}, l={l}"
                count += 1
    elapsed = time.perf_counter() - start
    ok = elapsed < 30.0
    _record(4, ok, f"series route == polynomial route at {count} grid points ({elapsed:.2f}s)")
    assert ok


def test_criterion_5_laurent_structure():
    start = time.perf_counter()
    problems = []
    for n in (1, 2, 3):
        p = s_laurent(n)
        if p.min_exponent() < -2 or p.max_exponent() > 2 * n:
            problems.append(f"exponent window violated at n={n}")
        # fresh sample points: the construction consumed the first 2n+5 odd
        # integers at k in {2, 4}; these l and k were never touched
        fresh_l = [2 * (2 * n + 5) + 1, 2 * (2 * n + 5) + 3]
        for l in fresh_l:
            for k in (8, 16):
                direct = s_invariant(BundleParams(n=n, k=k, l=l)).s / k
                if p.evaluate(l) != direct:
                    problems.append(f"holdout mismatch at n={n}, k={k}, l={l}")
        closed = (2 * n + 1) * (ahat_coeff(n + 1) + mixing_constant(n + 1) * l_coeff(n + 1))
        lead = p.coefficient(2 * n)
        if lead == 0 or abs(lead) != abs(closed):
            problems.append(f"leading coefficient mismatch at n={n}: {lead} vs {closed}")
    if abs(s_laurent(1).coefficient(2)) != Fraction(3, 896):
        problems.append("n=1 leading magnitude is not 3/896")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 30.0
    _record(5, ok, f"exponents in [-2, 2n], holdouts exact, leading = closed form ({elapsed:.2f}s)")
    assert not problems, problems
    assert elapsed < 30.0


def test_criterion_6_distinct_components_at_l_equal_1():
    start = time.perf_counter()
    problems = []
    for n in (1, 2, 3):
        p1 = s_laurent(n).evaluate(1)
        if p1 == 0:
            problems.append(f"n={n}: p(1) = 0, so |s(k,1)| = 0 for every k")
            continue
        values = [s_invariant(BundleParams(n=n, k=k, l=1)).s for k in range(2, 201, 2)]
        if len({abs(v) for v in values}) != 100:
            problems.append(f"n={n}: |s(k,1)| values not pairwise distinct")
        ks = list(range(2, 201, 2))
        for i, k in enumerate(ks):
            for j, kp in enumerate(ks):
                if values[i] * kp != values[j] * k:
                    problems.append(f"n={n}: linearity fails at k={k}, k'={kp}")
                    break
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 60.0
    _record(
        6,
        ok,
        "100 distinct |s(k,1)| per n"
        if ok
        else "; ".join(problems) + f" ({elapsed:.2f}s)",
    )
    assert not problems, problems
    assert elapsed < 60.0


def test_criterion_7_spin_classification():
    start = time.perf_counter()
    checked = 0
    for n in (1, 2, 3):
        for k in range(1, 51):
            for l in range(1, 51):
                if math.gcd(k, l) != 1:
                    continue
                assert is_spin(k, l, n) == (k % 2 == 0), f"n={n}, k={k}, l={l}"
                checked += 1
    elapsed = time.perf_counter() - start
    ok = elapsed < 10.0
    _record(7, ok, f"parity rule reproduced on {checked} coprime pairs ({elapsed:.2f}s)")
    assert ok


def test_criterion_8_euler_division_soundness():
    start = time.perf_counter()
    rng = random.Random(20240817)
    for n in (1, 2, 3):
        x, y = x_class(n), y_class(n)
        for _ in range(1000):
            l = rng.choice([v for v in range(-9, 10) if v != 0])
            k = rng.randint(-9, 9)
            w = RingElement(
                n,
                {
                    (2 * n + 1, 0): Fraction(rng.randint(-60, 60), rng.randint(1, 12)),
                    (2 * n, 1): Fraction(rng.randint(-60, 60), rng.randint(1, 12)),
                },
            )
            got = divide_by_euler_and_pair(euler_class(k, l, n) * w, k, l)
            assert got == w.coefficient(2 * n, 1), f"round trip at n={n}, k={k}, l={l}"
        for _ in range(100):
            k = rng.randint(-30, 30)
            l = rng.randint(-30, 30)
            lhs = (x * x).scale(l * l)
            rhs = euler_class(k, l, n) * (x.scale(l) - y.scale(k))
            assert lhs == rhs, f"identity at n={n}, k={k}, l={l}"
    elapsed = time.perf_counter() - start
    ok = elapsed < 10.0
    _record(8, ok, f"3000 round trips and 300 identity draws exact ({elapsed:.2f}s)")
    assert ok


def test_criterion_9_dense_oracle_equivalence():
    start = time.perf_counter()
    rng = random.Random(1729)
    points = set()
    while len(points) < 20:
        n = rng.choice([1, 2])
        k = 2 * rng.randint(1, 20)
        l = 2 * rng.randint(0, 10) + 1
        if math.gcd(k, l) == 1:
            points.add((n, k, l))
    for n, k, l in sorted(points):
        ours = s_invariant(BundleParams(n=n, k=k, l=l)).s
        theirs = dense_oracle.s_value(n, k, l)
        assert ours == theirs, f"oracle mismatch at n={n}, k={k}, l={l}: {ours} vs {theirs}"
    elapsed = time.perf_counter() - start
    ok = elapsed < 30.0
    _record(9, ok, f"dense-table oracle agrees at 20 random points ({elapsed:.2f}s)")
    assert ok

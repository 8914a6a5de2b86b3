import math
import random
from fractions import Fraction

import pytest

from kreckstolz import format_rational, parse_rational


@pytest.mark.parametrize(
    "value,text",
    [
        (Fraction(3, 4), "3/4"),
        (Fraction(-6, 8), "-3/4"),
        (Fraction(5), "5"),
        (Fraction(0), "0"),
        (Fraction(-7), "-7"),
        (Fraction(1, 896), "1/896"),
    ],
)
def test_format_canonical(value, text):
    assert format_rational(value) == text


def test_parse_round_trip():
    rng = random.Random(7)
    for _ in range(500):
        q = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert parse_rational(format_rational(q)) == q


def test_parse_accepts_plain_integers():
    assert parse_rational("12") == 12
    assert parse_rational("-3") == -3
    assert parse_rational("4/6") == Fraction(2, 3)  # normalized on the way in


@pytest.mark.parametrize(
    "bad", ["", "1/-2", "1/0", "a", "1.5", "+3", " 1", "1 ", "1/ 2", "3/", "/2", "1/2/3"]
)
def test_parse_rejects_bad_grammar(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_arithmetic_stays_canonical():
    rng = random.Random(11)
    for _ in range(300):
        a = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        b = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        for value in (a + b, a - b, a * b):
            assert value.denominator >= 1
            assert math.gcd(abs(value.numerator), value.denominator) == 1


def test_field_laws_random():
    rng = random.Random(13)
    for _ in range(300):
        a = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        b = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        c = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if b != 0:
            assert (a / b) * b == a

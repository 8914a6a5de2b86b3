from fractions import Fraction

import pytest

from kreckstolz import ahat_coeff, bernoulli_unsigned, l_coeff, mixing_constant, series_coeff

import dense_oracle


def test_classical_values():
    expected = [
        Fraction(1, 6),
        Fraction(1, 30),
        Fraction(1, 42),
        Fraction(1, 30),
        Fraction(5, 66),
    ]
    assert [bernoulli_unsigned(j) for j in range(1, 6)] == expected


def test_positive_for_all_small_indices():
    for j in range(1, 15):
        assert bernoulli_unsigned(j) > 0


@pytest.mark.parametrize("bad", [0, -1, -7])
def test_domain_errors(bad):
    with pytest.raises(ValueError):
        bernoulli_unsigned(bad)
    with pytest.raises(ValueError):
        ahat_coeff(bad)
    with pytest.raises(ValueError):
        l_coeff(bad)
    with pytest.raises(ValueError):
        mixing_constant(bad)


def test_series_coeff_rejects_unknown_series():
    with pytest.raises(ValueError):
        series_coeff("todd", 1)


def test_ahat_against_series_inversion():
    # independent route: invert sinh(t/2)/(t/2) term by term
    oracle = dense_oracle.ahat_coefficients(12)
    for j in range(1, 13):
        assert ahat_coeff(j) == oracle[j]
    assert ahat_coeff(1) == Fraction(-1, 24)
    assert ahat_coeff(2) == Fraction(7, 5760)


def test_lgenus_against_series_division():
    oracle = dense_oracle.lgenus_coefficients(12)
    for j in range(1, 13):
        assert l_coeff(j) == oracle[j]
    assert l_coeff(1) == Fraction(1, 3)
    assert l_coeff(2) == Fraction(-1, 45)
    assert l_coeff(3) == Fraction(2, 945)


def test_relation_between_the_two_series():
    for j in range(1, 13):
        factor = Fraction(1 - 2 ** (2 * j - 1), 2 ** (4 * j - 1))
        assert ahat_coeff(j) == factor * l_coeff(j)


def test_mixing_constant_values():
    assert mixing_constant(1) == Fraction(1, 8)
    assert mixing_constant(2) == Fraction(1, 224)
    assert mixing_constant(3) == Fraction(1, 3968)

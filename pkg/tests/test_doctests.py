import doctest

import pytest

import kreckstolz
import kreckstolz.bernoulli
import kreckstolz.genera
import kreckstolz.rationals


@pytest.mark.parametrize(
    "module",
    [kreckstolz, kreckstolz.bernoulli, kreckstolz.genera, kreckstolz.rationals],
    ids=lambda m: m.__name__,
)
def test_module_doctests(module):
    failures, _ = doctest.testmod(module, verbose=False)
    assert failures == 0

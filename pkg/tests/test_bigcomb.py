import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbertdim.bigcomb import binomial, integer_power


def count_subsets(n, m):
    return sum(1 for _ in itertools.combinations(range(n), m))


@pytest.mark.parametrize("n,m,expected", [(12, 6, 924), (7, 0, 1), (5, 2, 10), (0, 0, 1)])
def test_binomial_examples(n, m, expected):
    assert binomial(n, m) == expected


@pytest.mark.parametrize("n", range(0, 11))
def test_binomial_matches_subset_enumeration(n):
    for m in range(-1, n + 2):
        expected = count_subsets(n, m) if 0 <= m <= n else 0
        assert binomial(n, m) == expected


def test_binomial_out_of_range_is_zero():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_huge_is_exact():
    # C(400, 200) > 1e100; exact equality against the stdlib
    import math

    assert binomial(400, 200) == math.comb(400, 200)
    assert binomial(400, 200) > 10**100


def test_pascal_symmetry_rowsum():
    for n in range(0, 41):
        row = [binomial(n, m) for m in range(n + 1)]
        assert row == row[::-1]
        assert sum(row) == integer_power(2, n)
        if n >= 1:
            for m in range(1, n + 1):
                assert row[m] == binomial(n - 1, m - 1) + binomial(n - 1, m)


@pytest.mark.parametrize("base,exp,expected", [(2, 6, 64), (3, 4, 81), (9, 0, 1), (0, 3, 0)])
def test_integer_power(base, exp, expected):
    assert integer_power(base, exp) == expected


def test_integer_power_rejects_zero_to_zero():
    with pytest.raises(ValueError):
        integer_power(0, 0)


@given(st.integers(0, 200), st.integers(0, 200))
def test_symmetry_property(n, m):
    m = m % (n + 1)
    assert binomial(n, m) == binomial(n, n - m)

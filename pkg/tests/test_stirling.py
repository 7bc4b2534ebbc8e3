import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycauchy.stirling import (
    kn_is_tied,
    max_index_Kn,
    multiparam_stirling1,
    multiparam_stirling_row,
    stirling_row,
    unsigned_stirling1,
)


def cycles_count(n, m):
    """Permutations of n elements with exactly m cycles, by enumeration."""
    count = 0
    for perm in itertools.permutations(range(n)):
        seen, cycles = set(), 0
        for s in range(n):
            if s not in seen:
                cycles += 1
                while s not in seen:
                    seen.add(s)
                    s = perm[s]
        count += cycles == m
    return count


@pytest.mark.parametrize("n", range(0, 7))
def test_row_matches_cycle_enumeration(n):
    assert list(stirling_row(n)) == [cycles_count(n, m) for m in range(n + 1)]


def test_examples():
    assert [unsigned_stirling1(3, m) for m in (1, 2, 3)] == [2, 3, 1]
    assert unsigned_stirling1(4, 2) == 11
    assert all(unsigned_stirling1(n, n) == 1 for n in range(15))
    assert stirling_row(3) == (0, 2, 3, 1)
    assert stirling_row(4) == (0, 6, 11, 6, 1)
    assert stirling_row(0) == (1,)


def test_m_greater_than_n():
    with pytest.raises(ValueError):
        unsigned_stirling1(3, 4)


@pytest.mark.parametrize("n", range(21))
def test_row_sum_is_factorial(n):
    row = stirling_row(n)
    assert sum(row) == math.factorial(n)
    if n >= 1:
        assert row[0] == 0


@pytest.mark.parametrize("n", range(16))
def test_multiparam_specialises_to_signed(n):
    A = list(range(n))
    for m in range(n + 1):
        assert multiparam_stirling1(n, m, A) == (-1) ** (n - m) * unsigned_stirling1(n, m)


def test_multiparam_zero_roots_and_empty():
    assert multiparam_stirling_row(4, [0, 0, 0, 0]) == (0, 0, 0, 0, 1)
    assert multiparam_stirling1(0, 0, []) == 1
    assert multiparam_stirling1(0, 0, [F(7, 3)]) == 1


def test_multiparam_short_A():
    with pytest.raises(ValueError):
        multiparam_stirling1(3, 1, [0, 1])


def elementary_symmetric(values, r):
    return sum((math.prod(c) for c in itertools.combinations(values, r)), F(0))


@given(st.lists(st.fractions(max_denominator=20).filter(lambda x: abs(x) < 50), max_size=6), st.randoms())
def test_multiparam_is_signed_elementary_symmetric_and_symmetric(A, rnd):
    n = len(A)
    row = multiparam_stirling_row(n, A)
    for m in range(n + 1):
        assert row[m] == (-1) ** (n - m) * elementary_symmetric(A, n - m)
    shuffled = list(A)
    rnd.shuffle(shuffled)
    assert multiparam_stirling_row(n, shuffled) == row


def test_kn_examples():
    assert max_index_Kn(3) == 2
    assert max_index_Kn(4) == 2
    assert max_index_Kn(2) == 1
    assert kn_is_tied(2)
    with pytest.raises(ValueError):
        max_index_Kn(0)


@pytest.mark.parametrize("n", range(3, 31))
def test_row_strictly_unimodal_around_kn(n):
    row = stirling_row(n)[1:]
    K = max_index_Kn(n)
    assert not kn_is_tied(n)
    peak = K - 1
    assert all(row[i] < row[i + 1] for i in range(peak))
    assert all(row[i] > row[i + 1] for i in range(peak, len(row) - 1))


def test_memo_concurrent_readers():
    from concurrent.futures import ThreadPoolExecutor

    ns = list(range(60, 140)) * 3
    with ThreadPoolExecutor(max_workers=8) as pool:
        rows = list(pool.map(stirling_row, ns))
    for n, row in zip(ns, rows):
        assert len(row) == n + 1 and sum(row) == math.factorial(n)

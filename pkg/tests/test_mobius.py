import random

import pytest
from hypothesis import given, strategies as st

from resolvekit import mobius


def test_popcount_basics():
    assert mobius.popcount(0) == 0
    assert mobius.popcount(7) == 3
    assert mobius.popcount(2**10 - 1) == 10
    with pytest.raises(ValueError):
        mobius.popcount(-1)


def test_mu_values():
    assert all(mobius.mu(x, x) == 1 for x in (0, 1, 5, 137))
    assert mobius.mu(0, 7) == -1
    assert mobius.mu(8, 7) == 0
    assert mobius.mu(1, 7) == 1


def test_mu_defining_recursion_exhaustive():
    # sum of mu(x, z) over x <= z <= y is the identity indicator
    for y in range(256):
        for x in mobius.downset(y):
            total = sum(mobius.mu(x, z) for z in mobius.downset(y)
                        if z & x == x)
            assert total == (1 if x == y else 0)


def test_downset_order_and_size():
    assert mobius.downset(0) == [0]
    assert mobius.downset(5) == [0, 1, 4, 5]
    assert mobius.downset(7) == list(range(8))
    for j in (0, 1, 6, 25, 255):
        ds = mobius.downset(j)
        assert len(ds) == 2 ** mobius.popcount(j)
        assert ds == sorted(ds)
        assert all(i & j == i for i in ds)
        if j > 0:
            plus = sum(1 for i in ds if mobius.mu(i, j) == 1)
            assert plus == 2 ** (mobius.popcount(j) - 1)


def test_popcount_prefix_sum_small_vs_bruteforce():
    acc = 0
    for x in range(2048):
        acc += mobius.popcount(x)
        assert mobius.popcount_prefix_sum(x) == acc


@pytest.mark.parametrize("k", range(1, 25))
def test_popcount_prefix_sum_closed_form(k):
    assert mobius.popcount_prefix_sum(2**k - 1) == k * 2 ** (k - 1)


def test_lindstrom_identity_random_f():
    rnd = random.Random(7)
    for a in range(16):
        for b in range(16):
            if b & a == b:
                continue
            f = {x: rnd.randrange(-50, 50) for x in mobius.downset(a & b)}
            assert mobius.lindstrom_check(a, b, f) == 0


def test_lindstrom_precondition():
    with pytest.raises(ValueError):
        mobius.lindstrom_check(3, 3, {x: 1 for x in mobius.downset(3)})
    with pytest.raises(ValueError):
        mobius.lindstrom_check(7, 1, {0: 2, 1: 5})
    # b not below a is fine even when a is below b
    assert mobius.lindstrom_check(1, 3, {0: 4, 1: 9}) == 0


@given(st.integers(min_value=0, max_value=2**40),
       st.integers(min_value=0, max_value=2**40))
def test_mu_zero_iff_incomparable(x, y):
    assert (mobius.mu(x, y) == 0) == (x & y != x)


@given(st.integers(min_value=0, max_value=2**48))
def test_prefix_sum_recurrence(x):
    assert (mobius.popcount_prefix_sum(x + 1)
            == mobius.popcount_prefix_sum(x) + mobius.popcount(x + 1))

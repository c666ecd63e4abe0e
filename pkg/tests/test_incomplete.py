import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from incpoly import parse
from incpoly.families import fib, lucas
from incpoly.incomplete import (
    IncompleteIndex,
    IncompleteTable,
    IndexOutOfRange,
    Kind,
    Special,
    fib_incomplete,
    fib_incomplete_by_recurrence,
    fib_incomplete_special,
    incomplete,
    lucas_incomplete,
    lucas_incomplete_by_recurrence,
    lucas_incomplete_special,
    special_l,
)
from incpoly.polynomial import ZERO, Polynomial, eval_int

P = Polynomial


def filipponi_fib(n, k):
    return sum(math.comb(n - 1 - j, j) for j in range(k + 1))


def filipponi_lucas(n, k):
    # n/(n-j) C(n-j, j) over exact rationals
    from fractions import Fraction
    total = sum(Fraction(n, n - j) * math.comb(n - j, j) for j in range(k + 1))
    assert total.denominator == 1
    return int(total)


def test_fib_incomplete_examples(x):
    assert fib_incomplete(x, 8, 3) == P([0, 4, 0, 10, 0, 6, 0, 1])
    assert fib_incomplete(x, 5, 0) == P([0, 0, 0, 0, 1])
    assert fib_incomplete(P([1]), 7, 2) == 12


def test_lucas_incomplete_examples(x):
    assert lucas_incomplete(x, 8, 3) == P([0, 0, 16, 0, 20, 0, 8, 0, 1])
    assert lucas_incomplete(x, 4, 1) == P([0, 0, 4, 0, 1])
    assert lucas_incomplete(x, 0, 0) == P([2])
    assert lucas_incomplete(P([0, 3]), 0, 0) == P([2])


def test_strict_mode_rejects(x):
    for n, l in [(0, 0), (5, 3), (4, -1), (1, 1)]:
        with pytest.raises(IndexOutOfRange):
            fib_incomplete(x, n, l)
    for n, l in [(3, 2), (4, -1), (-1, 0)]:
        with pytest.raises(IndexOutOfRange):
            lucas_incomplete(x, n, l)


def test_extended_conventions(x):
    assert fib_incomplete(x, 4, -1, extended=True) == ZERO
    assert fib_incomplete(x, 4, 2, extended=True) == ZERO
    assert fib_incomplete(x, 0, 0, extended=True) == ZERO
    assert lucas_incomplete(x, 3, 2, extended=True) == ZERO
    assert lucas_incomplete(x, 3, -2, extended=True) == ZERO
    # extension never changes a strictly valid value
    assert fib_incomplete(x, 9, 2, extended=True) == fib_incomplete(x, 9, 2)


def test_index_dispatch(x):
    assert incomplete(x, IncompleteIndex(8, 3, Kind.FIBONACCI)) == fib_incomplete(x, 8, 3)
    assert incomplete(x, IncompleteIndex(8, 3, Kind.LUCAS)) == lucas_incomplete(x, 8, 3)
    assert IncompleteIndex(7, 3).is_strict()
    assert not IncompleteIndex(7, 4).is_strict()
    assert not IncompleteIndex(7, 4).in_support()


def test_cap_recovers_complete(h):
    for n in range(1, 31):
        assert fib_incomplete(h, n, (n - 1) // 2) == fib(h, n)
        assert lucas_incomplete(h, n, n // 2) == lucas(h, n)
    assert lucas_incomplete(h, 0, 0) == lucas(h, 0)


def test_monotone_accretion(h):
    pw = [h**k for k in range(40)]
    for n in range(1, 26):
        for l in range((n - 1) // 2):
            step = fib_incomplete(h, n, l + 1) - fib_incomplete(h, n, l)
            assert step == math.comb(n - 2 - l, l + 1) * pw[n - 3 - 2 * l]
        for l in range(n // 2):
            step = lucas_incomplete(h, n, l + 1) - lucas_incomplete(h, n, l)
            i = l + 1
            assert step * (n - i) == n * math.comb(n - i, i) * pw[n - 2 * i]


def test_integer_specialization(x):
    for n in range(1, 31):
        for k in range((n - 1) // 2 + 1):
            assert eval_int(fib_incomplete(x, n, k), 1) == filipponi_fib(n, k)
        for k in range(n // 2 + 1):
            assert eval_int(lucas_incomplete(x, n, k), 1) == filipponi_lucas(n, k)


@pytest.mark.parametrize(
    "n, which, expected",
    [
        (6, Special.PENULTIMATE, [0, 0, 0, 4, 0, 1]),
        (7, Special.PENULTIMATE, [0, 0, 6, 0, 5, 0, 1]),
        (5, Special.L2, [1, 0, 3, 0, 1]),
    ],
)
def test_fib_special_examples(x, n, which, expected):
    assert fib_incomplete_special(x, n, which) == P(expected)


@pytest.mark.parametrize(
    "n, which, expected",
    [
        (6, Special.PENULTIMATE, [0, 0, 9, 0, 6, 0, 1]),
        (5, Special.PENULTIMATE, [0, 0, 0, 5, 0, 1]),
        (4, Special.L2, [2, 0, 4, 0, 1]),
    ],
)
def test_lucas_special_examples(x, n, which, expected):
    assert lucas_incomplete_special(x, n, which) == P(expected)


def test_specials_match_definition(h):
    for which in Special:
        for n in range(1, 26):
            try:
                closed = fib_incomplete_special(h, n, which)
            except IndexOutOfRange:
                assert n < {"l0": 1, "l1": 3, "l2": 5, "full": 1, "penultimate": 3}[which.value]
                continue
            assert closed == fib_incomplete(h, n, special_l(Kind.FIBONACCI, n, which), extended=True)
        for n in range(1, 26):
            try:
                closed = lucas_incomplete_special(h, n, which)
            except IndexOutOfRange:
                continue
            assert closed == lucas_incomplete(h, n, special_l(Kind.LUCAS, n, which), extended=True)


def test_special_thresholds(x):
    with pytest.raises(IndexOutOfRange):
        fib_incomplete_special(x, 4, Special.L2)
    with pytest.raises(IndexOutOfRange):
        lucas_incomplete_special(x, 1, Special.PENULTIMATE)
    # n = 3 odd case: F^0_3 = F_3 - 1
    assert fib_incomplete_special(x, 3, Special.PENULTIMATE) == P([0, 0, 1])


def test_recurrence_route_matches_definition(h):
    for l in range(0, 8):
        assert fib_incomplete_by_recurrence(h, l, 30) == [
            fib_incomplete(h, n, l, extended=True) for n in range(31)
        ]
        assert lucas_incomplete_by_recurrence(h, l, 30) == [
            lucas_incomplete(h, n, l, extended=True) for n in range(31)
        ]


def test_table_matches_direct(h):
    t = IncompleteTable(h)
    for n in range(-2, 20):
        for l in range(-3, 12):
            assert t.F(n, l) == (fib_incomplete(h, n, l, extended=True) if n >= 0 else ZERO)
            assert t.L(n, l) == (lucas_incomplete(h, n, l, extended=True) if n >= 0 else ZERO)
    assert t.fib(12) == fib(h, 12)
    assert t.lucas(12) == lucas(h, 12)


@given(st.lists(st.integers(-5, 5), max_size=4), st.integers(1, 20))
def test_random_h_cap(coeffs, n):
    h = P(coeffs)
    assert fib_incomplete(h, n, (n - 1) // 2) == fib(h, n)
    assert lucas_incomplete(h, n, n // 2) == lucas(h, n)

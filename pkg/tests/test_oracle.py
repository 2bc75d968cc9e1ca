from __future__ import annotations

import pytest

from sgp.oracle import (naive_apery, naive_conductor, naive_contains,
                        naive_divisors, naive_generalized_fr, naive_genus)


def test_naive_contains():
    assert not naive_contains([3, 5], 7)
    assert naive_contains([3, 5], 0)
    assert naive_contains([2, 5], 4)
    assert not naive_contains([3, 5], -2)


def test_naive_contains_rejects_bad_generators():
    with pytest.raises(ValueError):
        naive_contains([4, 6], 5)
    with pytest.raises(ValueError):
        naive_contains([], 5)


def test_naive_apery():
    assert naive_apery([3, 5], 5) == [0, 3, 6, 9, 12]
    assert naive_apery([3, 5], 0) == []
    assert naive_apery([2, 5], 2) == [0, 5]


def test_naive_divisors():
    assert naive_divisors([2, 5], {4, 5, 7}) == [0, 2, 4, 5, 7]
    assert naive_divisors([3, 5], 0) == [0]
    assert naive_divisors([3, 5], 19) == [0, 3, 5, 6, 8, 9, 10, 11, 13, 14, 16, 19]


def test_naive_invariants():
    assert naive_conductor([3, 5]) == 8
    assert naive_genus([3, 5]) == 4
    assert naive_conductor([1]) == 0
    assert naive_genus([1]) == 0


def test_naive_generalized_fr():
    res = naive_generalized_fr([2, 5], 4, 3, 20)
    assert res.value == 5
    assert res.certified
    assert naive_generalized_fr([3, 5], 15, 2, 30).value == 11
    # r = 1 reduces to the classical scan
    assert naive_generalized_fr([3, 5], 9, 1, 20).value == 3


def test_naive_generalized_fr_uncertified_window():
    res = naive_generalized_fr([3, 5], 15, 2, 16)
    assert not res.certified

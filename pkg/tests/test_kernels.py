from __future__ import annotations

import numpy as np
import pytest

from sgp import from_generators, generalized_fr
from sgp.kernels import (BACKEND, HAVE_NUMBA, min_union_search, pack_bitsets)


def test_pack_bitsets_popcounts():
    rng = np.random.default_rng(3)
    rows = rng.random((5, 200)) < 0.3
    words = pack_bitsets(rows)
    assert words.shape == (5, 4)
    assert np.array_equal(np.bitwise_count(words).sum(axis=1),
                          rows.sum(axis=1))


def _brute(rows, r):
    from itertools import combinations
    best = None
    best_combo = None
    for combo in combinations(range(len(rows)), r):
        size = int(np.logical_or.reduce(rows[list(combo)]).sum())
        if best is None or size < best:
            best, best_combo = size, combo
    return best, best_combo


@pytest.mark.parametrize("backend", ["numpy"] + (["numba"] if HAVE_NUMBA else []))
def test_search_matches_bruteforce(backend):
    rng = np.random.default_rng(11)
    for trial in range(20):
        n = int(rng.integers(4, 12))
        width = int(rng.integers(10, 150))
        r = int(rng.integers(1, min(n, 4) + 1))
        rows = rng.random((n, width)) < rng.uniform(0.1, 0.5)
        words = pack_bitsets(rows)
        expected, expected_combo = _brute(rows, r)
        best, idx, nodes, certified = min_union_search(
            words, r, expected + 10, 10 ** 6, backend=backend)
        assert certified
        assert best == expected
        # lexicographically smallest optimal tuple
        assert tuple(idx) == expected_combo


def test_backends_traverse_identically():
    if not HAVE_NUMBA:
        pytest.skip("numba unavailable")
    rng = np.random.default_rng(5)
    rows = rng.random((10, 90)) < 0.25
    words = pack_bitsets(rows)
    a = min_union_search(words, 3, 100, 10 ** 6, backend="numpy")
    b = min_union_search(words, 3, 100, 10 ** 6, backend="numba")
    assert a[0] == b[0] and np.array_equal(a[1], b[1])
    assert a[2] == b[2] and a[3] == b[3]
    # and under a budget cut, both stop at the same node with the same bound
    a = min_union_search(words, 3, 100, 17, backend="numpy")
    b = min_union_search(words, 3, 100, 17, backend="numba")
    assert a[0] == b[0] and np.array_equal(a[1], b[1]) and a[2] == b[2]
    assert not a[3] and not b[3]


def test_generalized_fr_backend_equivalence():
    if not HAVE_NUMBA:
        pytest.skip("numba unavailable")
    s = from_generators([5, 7])
    for r in (1, 2, 3, 4):
        a = generalized_fr(s, 2 * s.conductor - 1, r, backend="numpy")
        b = generalized_fr(s, 2 * s.conductor - 1, r, backend="numba")
        assert a == b


def test_budget_cut_returns_uncertified():
    rows = np.ones((6, 40), dtype=bool)
    words = pack_bitsets(rows)
    best, idx, nodes, certified = min_union_search(words, 2, 100, 3)
    assert not certified
    assert nodes == 3


def test_backend_choice_is_valid():
    assert BACKEND in ("numba", "numpy")
    if BACKEND == "numba":
        assert HAVE_NUMBA

"""Hot search kernel: minimum union size over increasing index tuples.

Divisor sets of the candidate elements are packed into rows of uint64
bitset words.  The kernel enumerates strictly increasing index tuples
depth-first in lexicographic order, keeping one running union per depth,
and prunes a partial tuple as soon as its union size plus the number of
elements still to add cannot strictly beat the best size seen (each added
element contributes at least itself as a new divisor).  Lexicographic
order plus strict-improvement updates make the reported witness the
lexicographically smallest optimal tuple on every backend.

Two interchangeable backends, selected by the environment variable
``SGP_BACKEND``:

- ``numba`` (default whenever numba imports): the same loop compiled with
  ``@njit``, with a SWAR popcount.
- ``numpy``: plain-Python driver over numpy uint64 rows, popcounts via
  ``np.bitwise_count``.

Both traverse identical node sequences; results are bit-identical.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_env = os.environ.get("SGP_BACKEND", "").strip().lower()
if _env not in ("", "numba", "numpy"):
    raise ValueError(f"SGP_BACKEND must be 'numba' or 'numpy', got {_env!r}")
if _env == "numba" and not HAVE_NUMBA:
    warnings.warn("SGP_BACKEND=numba but numba is unavailable; using numpy")
    _env = "numpy"
BACKEND: str = _env or ("numba" if HAVE_NUMBA else "numpy")


def pack_bitsets(rows: np.ndarray) -> np.ndarray:
    """Pack a (n, width) boolean matrix into (n, ceil(width/64)) uint64 words."""
    rows = np.ascontiguousarray(rows, dtype=bool)
    n, width = rows.shape
    pad = (-width) % 64
    if pad:
        rows = np.concatenate(
            [rows, np.zeros((n, pad), dtype=bool)], axis=1)
    packed = np.packbits(rows, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64)


def _search_numpy(words: np.ndarray, r: int, best_init: int,
                  node_budget: int) -> tuple[int, np.ndarray, int, bool]:
    """Reference driver in plain Python over numpy rows."""
    n, nw = words.shape
    acc = np.zeros((r + 1, nw), dtype=np.uint64)
    cnt = np.zeros(r + 1, dtype=np.int64)
    idx = np.full(r, -1, dtype=np.int64)
    best = int(best_init)
    best_idx = np.full(r, -1, dtype=np.int64)
    nodes = 0
    d = 0
    idx[0] = -1
    while d >= 0:
        idx[d] += 1
        i = int(idx[d])
        if n - i < r - d:          # not enough candidates left
            d -= 1
            continue
        nodes += 1
        if nodes > node_budget:
            return best, best_idx, nodes - 1, False
        np.bitwise_or(acc[d], words[i], out=acc[d + 1])
        c = int(np.bitwise_count(acc[d + 1]).sum())
        cnt[d + 1] = c
        if c + (r - d - 1) >= best:   # cannot strictly improve
            continue
        if d + 1 == r:
            best = c
            best_idx[:] = idx
            continue
        d += 1
        idx[d] = idx[d - 1]
    return best, best_idx, nodes, True


if HAVE_NUMBA:

    @njit(cache=True)
    def _popcount64(x: np.uint64) -> np.int64:
        x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
        x = (x & np.uint64(0x3333333333333333)) + \
            ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
        x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))

    @njit(cache=True)
    def _search_numba(words, r, best_init, node_budget):
        n, nw = words.shape
        acc = np.zeros((r + 1, nw), dtype=np.uint64)
        idx = np.full(r, -1, dtype=np.int64)
        best = best_init
        best_idx = np.full(r, -1, dtype=np.int64)
        nodes = 0
        d = 0
        while d >= 0:
            idx[d] += 1
            i = idx[d]
            if n - i < r - d:
                d -= 1
                continue
            nodes += 1
            if nodes > node_budget:
                return best, best_idx, nodes - 1, False
            c = np.int64(0)
            for w in range(nw):
                u = acc[d, w] | words[i, w]
                acc[d + 1, w] = u
                c += _popcount64(u)
            if c + (r - d - 1) >= best:
                continue
            if d + 1 == r:
                best = c
                for t in range(r):
                    best_idx[t] = idx[t]
                continue
            d += 1
            idx[d] = idx[d - 1]
        return best, best_idx, nodes, True


def min_union_search(words: np.ndarray, r: int, best_init: int,
                     node_budget: int,
                     backend: str | None = None) -> tuple[int, np.ndarray, int, bool]:
    """Minimum popcount of OR over strictly increasing r-tuples of rows.

    Returns ``(best, best_idx, nodes, certified)``.  ``best_idx`` is all
    -1 when no tuple beat ``best_init``; ``certified`` is False when the
    node budget cut the traversal short.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    words = np.ascontiguousarray(words, dtype=np.uint64)
    be = backend or BACKEND
    if be == "numba" and HAVE_NUMBA:
        best, best_idx, nodes, certified = _search_numba(
            words, np.int64(r), np.int64(best_init), np.int64(node_budget))
        return int(best), np.asarray(best_idx), int(nodes), bool(certified)
    return _search_numpy(words, r, best_init, node_budget)

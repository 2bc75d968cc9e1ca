"""Brute-force reference implementations.

Everything here recomputes results from the bare definitions (memoized
combination sieve, definitional scans, exhaustive subset minimisation) and
deliberately shares no helper with the optimised modules, so the rest of
the package can be cross-checked against an independent path.  Slow on
purpose; desk scale only.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

_TABLES: dict[tuple[int, ...], np.ndarray] = {}


def _key(gens: Iterable[int]) -> tuple[int, ...]:
    key = tuple(sorted({int(g) for g in gens}))
    if not key:
        raise ValueError("no generators")
    if key[0] < 1:
        raise ValueError("generators must be positive")
    if math.gcd(*key) != 1:
        raise ValueError("gcd of generators must be 1")
    return key


def _table(key: tuple[int, ...], limit: int) -> np.ndarray:
    """Memoized membership table over [0, limit), pure combination sieve."""
    cached = _TABLES.get(key)
    if cached is not None and len(cached) >= limit:
        return cached
    size = max(limit, 2 * (cached.size if cached is not None else 64))
    table = bytearray(size)
    table[0] = 1
    for x in range(key[0], size):
        for g in key:
            if g > x:
                break
            if table[x - g]:
                table[x] = 1
                break
    arr = np.frombuffer(bytes(table), dtype=np.uint8).astype(bool)
    _TABLES[key] = arr
    return arr


def _tail_start(key: tuple[int, ...]) -> int:
    """Least t such that every integer >= t is a member.

    Detected as the first run of min(gens) consecutive members: adding the
    smallest generator repeatedly fills everything beyond such a run.
    """
    mu = key[0]
    limit = 4 * key[-1] + 4
    while True:
        table = _table(key, limit)
        run = 0
        for x in range(limit):
            run = run + 1 if table[x] else 0
            if run == mu:
                return x - mu + 1
        limit *= 2


def _mask(key: tuple[int, ...], lo: int, hi: int) -> np.ndarray:
    """Membership over [lo, hi) with negatives false and the tail filled."""
    n = hi - lo
    out = np.zeros(max(n, 0), dtype=bool)
    if n <= 0:
        return out
    if hi > 0:
        table = _table(key, hi)
        a = max(lo, 0)
        out[a - lo:] = table[a:hi]
    return out


def naive_contains(gens: Iterable[int], x: int) -> bool:
    """Membership by exhaustive nonnegative-combination sieve (memoized)."""
    key = _key(gens)
    if x < 0:
        return False
    return bool(_table(key, x + 1)[x])


def naive_genus(gens: Iterable[int]) -> int:
    """Number of non-members, by counting them below the full tail."""
    key = _key(gens)
    t = _tail_start(key)
    return int(t - np.count_nonzero(_table(key, max(t, 1))[:t]))


def naive_conductor(gens: Iterable[int]) -> int:
    return _tail_start(_key(gens))


def naive_apery(gens: Iterable[int], n: int) -> list[int]:
    """{s in S : s - n not in S} by direct scan per the definition."""
    key = _key(gens)
    # s - n not in S forces s - n < tail start, so s < tail + max(n, 0)
    bound = _tail_start(key) + max(n, 0)
    in_s = _mask(key, 0, bound)
    shifted = _mask(key, -n, bound - n)
    return [int(s) for s in np.flatnonzero(in_s & ~shifted)]


def naive_divisors(gens: Iterable[int], target: int | Iterable[int]) -> list[int]:
    """Divisors of a single target, or the union over a set of targets."""
    key = _key(gens)
    if isinstance(target, (int, np.integer)):
        targets = [int(target)]
    else:
        targets = sorted({int(t) for t in target})
        if not targets:
            raise ValueError("empty target set")
    width = max(targets) + 1
    out = np.zeros(max(width, 0), dtype=bool)
    for x in targets:
        if x < 0:
            continue
        m = _mask(key, 0, x + 1)
        out[:x + 1] |= m & m[::-1]
    return [int(d) for d in np.flatnonzero(out)]


class OracleFr(NamedTuple):
    value: int
    certified: bool
    witness: tuple[int, ...]


def naive_generalized_fr(gens: Iterable[int], m: int, r: int,
                         window: int) -> OracleFr:
    """Exhaustive minimum of |D(m_1,...,m_r)| over m <= m_1 < ... < m_r <= window.

    Certified only when the window provably contains an optimal
    configuration, i.e. window >= value + 2 genus - 1 (any configuration
    reaching past that point already has too many divisors).
    """
    key = _key(gens)
    if r < 1:
        raise ValueError("r must be >= 1")
    table = _mask(key, 0, window + 1)
    candidates = [int(x) for x in np.flatnonzero(table) if x >= m]
    if len(candidates) < r:
        raise ValueError("window holds fewer than r elements")
    masks = {}
    for x in candidates:
        acc = 0
        for d in naive_divisors(key, x):
            acc |= 1 << d
        masks[x] = acc
    best = None
    best_tuple: tuple[int, ...] = ()
    for combo in combinations(candidates, r):
        union = 0
        for x in combo:
            union |= masks[x]
        size = union.bit_count()
        if best is None or size < best:
            best = size
            best_tuple = combo
    certified = window >= best + 2 * naive_genus(key) - 1
    return OracleFr(int(best), bool(certified), best_tuple)

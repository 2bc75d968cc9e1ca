"""Randomized checks of the ground/triangle machinery against the
brute-force path.

Each ``check_*`` function runs ``count`` randomized instances over
two-generator semigroups with a*b <= 400 and returns the number of
instances actually exercised (the acceptance gate sums these).  Chain
instances are generated directly in ground-interval coordinates so that
the ordering hypotheses hold by construction:

- the first interval contains the origin (either {0..u1} or a wrapped
  interval ending at index u1 <= i1 - 2),
- later intervals start at amenable indices, stay inside the free region,
  and leave a gap of at least one index between neighbours.
"""

from __future__ import annotations

import math

from sgp import Dim2Semigroup
from sgp.dim2 import Extend, Middle, Multiple
from sgp.oracle import naive_divisors

PAIRS_AB_400 = [(a, b) for a in range(2, 20) for b in range(a + 1, 401)
                if a * b <= 400 and math.gcd(a, b) == 1]

_CACHE: dict[tuple[int, int], Dim2Semigroup] = {}


def _s2(pair) -> Dim2Semigroup:
    if pair not in _CACHE:
        _CACHE[pair] = Dim2Semigroup(*pair)
    return _CACHE[pair]


def _random_pair(rng):
    return PAIRS_AB_400[int(rng.integers(0, len(PAIRS_AB_400)))]


def _mbar(rng, s2) -> int:
    return 2 * s2.c - 1 + int(rng.integers(0, 5))


def _amenable_starts(s2) -> list[int]:
    return [i for i in range(s2.b) if (i * s2.a) % s2.b < s2.a]


def _random_chain(rng, s2, t: int):
    """(n1, ..., nt) whose bases satisfy origin in L1 < L2 < ... < Lt,
    or None when the draw leaves no room."""
    a, b = s2.a, s2.b
    starts = _amenable_starts(s2)
    if rng.random() < 0.5:
        i1, u1 = 0, int(rng.integers(0, b - 1))
        h1 = u1
        region_hi = b - 2
    else:
        cand = [i for i in starts if i >= 2]
        if not cand:
            return None
        i1 = int(cand[int(rng.integers(0, len(cand)))])
        u1 = int(rng.integers(0, i1 - 1))
        h1 = b + u1 - i1
        region_hi = i1 - 2
    ns = [(i1 * a) % b + h1 * a]
    lo = u1 + 2
    for _ in range(t - 1):
        cand = [i for i in starts if lo <= i <= region_hi]
        if not cand:
            return None
        i_j = int(cand[int(rng.integers(0, len(cand)))])
        h_j = int(rng.integers(0, region_hi - i_j + 1))
        ns.append((i_j * a) % b + h_j * a)
        lo = i_j + h_j + 2
    return ns


def _oracle_diff(s2, big: list[int], small: list[int]) -> list[int]:
    gens = (s2.a, s2.b)
    return sorted(set(naive_divisors(gens, big)) - set(naive_divisors(gens, small)))


# -- individual suites ---------------------------------------------------------


def check_betweenness(rng, count: int) -> int:
    """Divisors shared by two ground elements divide everything between."""
    done = 0
    while done < count:
        s2 = _s2(_random_pair(rng))
        if s2.b < 4:
            continue
        mbar = _mbar(rng, s2)
        i, j, k = sorted(rng.choice(s2.b, size=3, replace=False).tolist())
        shared = set(s2.ground_divisors(mbar, i)) & set(s2.ground_divisors(mbar, k))
        assert shared <= set(s2.ground_divisors(mbar, j)), (s2, mbar, i, j, k)
        done += 1
    return done


def check_triangle_bases(rng, count: int) -> int:
    """triangle_base denotes exactly D(mbar+n) cut to the ground window."""
    done = 0
    while done < count:
        s2 = _s2(_random_pair(rng))
        mbar = _mbar(rng, s2)
        n = int(rng.integers(0, 2 * s2.a * s2.b))
        base = s2.triangle_base(mbar, n)
        got = s2.interval_values(mbar, base)
        window = [d for d in naive_divisors((s2.a, s2.b), mbar + n)
                  if mbar <= d < mbar + s2.b]
        assert got == window, (s2, mbar, n)
        done += 1
    return done


def check_divides_via_bases(rng, count: int) -> int:
    """Base inclusion agrees with membership of the difference."""
    done = 0
    while done < count:
        s2 = _s2(_random_pair(rng))
        mbar = _mbar(rng, s2)
        # keep n below the whole-ground regime (h >= b - 1)
        n = int(rng.integers(0, s2.a * (s2.b - 1)))
        n_prime = int(rng.integers(0, 2 * n + 1)) if n else 0
        if s2.ih_rep(n).h >= s2.b - 1:
            continue
        got = s2.divides_via_bases(mbar, n_prime, n)
        assert got == s2.base.contains(n - n_prime), (s2, mbar, n_prime, n)
        done += 1
    return done


def check_delta_divisors(rng, count: int) -> int:
    """Closed-form triangle moves equal oracle set differences.

    Cycles through the three change tags, each with and without the
    third triangle.
    """
    done = 0
    while done < count:
        s2 = _s2(_random_pair(rng))
        a, b = s2.a, s2.b
        mbar = _mbar(rng, s2)
        kind = done % 6
        if kind in (0, 1):      # Middle with / without n3
            chain = _random_chain(rng, s2, 3 if kind == 0 else 2)
            if chain is None:
                continue
            if kind == 0:
                n1, n2, n3 = chain
                got = s2.delta_divisors(mbar, n1, Middle(n2), n3)
                expected = _oracle_diff(
                    s2, [mbar + n1, mbar + n2, mbar + n3],
                    [mbar + n1, mbar + n3])
            else:
                n1, n2 = chain
                got = s2.delta_divisors(mbar, n1, Middle(n2))
                expected = _oracle_diff(s2, [mbar + n1, mbar + n2], [mbar + n1])
        elif kind in (2, 3):    # Extend with / without n3
            chain = _random_chain(rng, s2, 2)
            if chain is None:
                continue
            n1, n3 = chain
            base1 = s2.triangle_base(mbar, n1)
            i3 = s2.ih_rep(n3).i
            u1 = s2.uv_rep(n1).u
            k_hi = min(i3 - 2 - u1, b - 2 - base1.h)
            if k_hi < 1:
                continue
            k = int(rng.integers(1, k_hi + 1))
            if kind == 2:
                got = s2.delta_divisors(mbar, n1, Extend(k), n3)
                expected = _oracle_diff(
                    s2, [mbar + n1 + k * a, mbar + n3], [mbar + n1, mbar + n3])
            else:
                got = s2.delta_divisors(mbar, n1, Extend(k))
                expected = _oracle_diff(s2, [mbar + n1 + k * a], [mbar + n1])
        else:                   # Multiple with / without n3
            chain = _random_chain(rng, s2, 2)
            if chain is None:
                continue
            n1, n3 = chain
            i3 = s2.ih_rep(n3).i
            u1 = s2.uv_rep(n1).u
            k_hi = min(i3 - 2, b - 2)
            if k_hi < u1:
                continue
            k = int(rng.integers(u1, k_hi + 1))
            if kind == 4:
                got = s2.delta_divisors(mbar, n1, Multiple(k), n3)
                expected = _oracle_diff(
                    s2, [mbar + k * a, mbar + n3], [mbar + n1, mbar + n3])
            else:
                got = s2.delta_divisors(mbar, n1, Multiple(k))
                expected = _oracle_diff(s2, [mbar + k * a], [mbar + n1])
        assert got == expected, (s2, mbar, kind, chain)
        done += 1
    return done


def check_exchange_inequalities(rng, count: int) -> int:
    """Moving the middle triangle onto the first one never loses ground
    divisors and never gains low divisors."""
    done = 0
    gens = None
    while done < count:
        s2 = _s2(_random_pair(rng))
        gens = (s2.a, s2.b)
        mbar = _mbar(rng, s2)
        chain = _random_chain(rng, s2, 3)
        if chain is None:
            continue
        n1, n2, n3 = chain
        h2 = s2.ih_rep(n2).h
        a = s2.a
        before = [mbar + n1, mbar + n2, mbar + n3]
        after = [mbar + n1 + (h2 + 1) * a, mbar + n3]
        context = [mbar + n1, mbar + n3]
        d_before = set(naive_divisors(gens, before))
        d_after = set(naive_divisors(gens, after))
        d_context = set(naive_divisors(gens, context))
        # capacity: at least as many divisors at or above mbar afterwards
        assert (len([d for d in d_before if d >= mbar])
                <= len([d for d in d_after if d >= mbar])), (s2, mbar, chain)
        # load: no more new divisors below mbar afterwards
        assert (len([d for d in d_before - d_context if d < mbar])
                >= len([d for d in d_after - d_context if d < mbar])), \
            (s2, mbar, chain)
        done += 1
    return done


def check_neighbor_locality(rng, count: int) -> int:
    """In a chain of intervals, only the two neighbours (and the origin)
    matter for the divisors a middle interval loses to the rest."""
    done = 0
    while done < count:
        s2 = _s2(_random_pair(rng))
        mbar = _mbar(rng, s2)
        t = int(rng.integers(3, 5))
        chain = _random_chain(rng, s2, t)
        if chain is None:
            continue
        gens = (s2.a, s2.b)
        intervals = [s2.interval_values(mbar, s2.triangle_base(mbar, n))
                     for n in chain]
        i = int(rng.integers(1, t - 1))
        own = set(naive_divisors(gens, intervals[i]))
        rest = [x for j, interval in enumerate(intervals) if j != i
                for x in interval]
        neighbors = sorted({mbar, *intervals[i - 1], *intervals[i + 1]})
        lhs = own - set(naive_divisors(gens, rest))
        rhs = own - set(naive_divisors(gens, neighbors))
        assert lhs == rhs, (s2, mbar, chain, i)
        done += 1
    return done


ALL_SUITES = (
    ("betweenness", check_betweenness),
    ("triangle-bases", check_triangle_bases),
    ("divides-via-bases", check_divides_via_bases),
    ("delta-divisors", check_delta_divisors),
    ("exchange-inequalities", check_exchange_inequalities),
    ("neighbor-locality", check_neighbor_locality),
)

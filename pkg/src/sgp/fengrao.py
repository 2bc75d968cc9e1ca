"""Classical and generalized Feng-Rao distances and Feng-Rao numbers.

The classical distance delta_FR(m) is the minimum of |D(m1)| over
elements m1 >= m; the r-th distance delta_FR^r(m) minimises |D(m1,...,mr)|
over strictly increasing r-tuples of elements starting at or above m.
For m >= 2c - 1 the r-th distance equals m + 1 - 2g + E(S, r), where the
constant E(S, r) is the r-th Feng-Rao number; for two-generator
semigroups E(S, r) = rho_r.

The exact search is branch-and-bound over increasing tuples:

- initial upper bound from the configuration D(m + rho_r) cut at m (an
  r-element configuration when m >= c, and the optimal one for m >= 2c-1
  on two-generator semigroups), falling back to the first r elements;
- any tuple whose largest element x exceeds UB + 2g - 1 already has
  |D| >= x + 1 - 2g > UB (valid since x >= c there), so candidates are
  capped at UB + 2g - 1;
- partial unions are pruned when their size cannot strictly beat the best
  found (every added element contributes at least itself).

Ties are resolved to the lexicographically smallest witness.  Exceeding
the node budget raises BudgetExceeded carrying the best bound, never a
silently wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .divisors import div_mask, div_set, div_set_multi
from .errors import (BelowConductor, BudgetExceeded, DomainError,
                     MbarTooSmall, NotInSemigroup)
from .semigroup import NumericalSemigroup

DEFAULT_MAX_NODES = 10 ** 7


@dataclass(frozen=True)
class Configuration:
    """A candidate set m <= m_1 < ... < m_r of elements with its |D|."""
    m: int
    elements: tuple[int, ...]
    divisor_count: int


@dataclass(frozen=True)
class FengRaoResult:
    m: int
    r: int
    value: int
    witness: Configuration
    method: str

    def descriptor(self) -> dict:
        return {"m": self.m, "r": self.r, "value": self.value,
                "witness": list(self.witness.elements), "method": self.method}


@dataclass(frozen=True)
class FengRaoNumber:
    r: int
    value: int
    method: str


def make_configuration(S: NumericalSemigroup, m: int,
                       elements: Iterable[int]) -> Configuration:
    """Validated configuration with its divisor count."""
    elems = tuple(sorted({int(e) for e in elements}))
    if not elems:
        raise DomainError("a configuration needs at least one element")
    for e in elems:
        if e < m or not S.contains(e):
            raise DomainError(f"{e} is not in S n [m, oo)")
    return Configuration(m, elems, len(div_set_multi(S, elems)))


# -- classical distance -------------------------------------------------------


def _classical_fr_at(S: NumericalSemigroup, m: int) -> tuple[int, int]:
    """(min |D(m1)|, minimizing m1) over elements m1 >= m, any integer m.

    Beyond 2c - 1 the count m1 + 1 - 2g is strictly increasing, so the
    scan cap max(m, 2c - 1) is sound.
    """
    if m < 0:
        m = 0
    best = None
    best_m1 = None
    for m1 in S.elements_in(m, max(m, 2 * S.conductor - 1) + 1):
        size = int(np.count_nonzero(div_mask(S, m1)))
        if best is None or size < best:
            best, best_m1 = size, m1
    return best, best_m1


def classical_fr(S: NumericalSemigroup, m: int) -> FengRaoResult:
    """delta_FR(m) with the minimizing element as witness, for m in S."""
    if m < 0 or not S.contains(m):
        raise NotInSemigroup(f"{m} is not an element of the semigroup")
    value, m1 = _classical_fr_at(S, m)
    return FengRaoResult(m, 1, value,
                         Configuration(m, (m1,), value), "search")


def classical_fr_two_gen(s2, m: int) -> int:
    """delta_FR(m+1) for <a,b> via the minimum formula, for m >= c.

    Returns min{rho_k : rho_k >= m + 2 - 2g}.
    """
    from .dim2 import Dim2Semigroup  # local import to avoid a cycle
    if not isinstance(s2, Dim2Semigroup):
        raise DomainError("classical_fr_two_gen needs a two-generator semigroup")
    if m < s2.c:
        raise BelowConductor(f"m = {m} < c = {s2.c}")
    return s2.base.next_element(m + 2 - 2 * s2.g)


# -- generalized distance (exact search) --------------------------------------


def _initial_configuration(S: NumericalSemigroup, m: int, r: int) -> Configuration:
    if m >= S.conductor:
        ds = div_set(S, m + S.rho(r))
        elems = tuple(e for e in ds if e >= m)
    else:
        elems = []
        x = m
        while len(elems) < r:
            x = S.next_element(x)
            elems.append(x)
            x += 1
        elems = tuple(elems)
    return make_configuration(S, m, elems)


def generalized_fr(S: NumericalSemigroup, m: int, r: int, *,
                   max_nodes: int = DEFAULT_MAX_NODES,
                   m_cap: int | None = None,
                   backend: str | None = None) -> FengRaoResult:
    """Exact delta_FR^r(m) by branch-and-bound, for m in S, r >= 1."""
    if r < 1:
        raise DomainError("r must be >= 1")
    if m < 0 or not S.contains(m):
        raise NotInSemigroup(f"{m} is not an element of the semigroup")
    init = _initial_configuration(S, m, r)
    ub = init.divisor_count
    cap = m_cap if m_cap is not None else ub + 2 * S.genus - 1
    candidates = S.elements_in(m, cap + 1)
    if len(candidates) < r:
        raise BudgetExceeded(
            f"m_cap = {cap} leaves fewer than r = {r} candidates; "
            f"best known bound {ub} (uncertified)",
            best_value=ub, witness=init.elements, nodes=0)
    width = candidates[-1] + 1
    rows = np.zeros((len(candidates), width), dtype=bool)
    for j, x in enumerate(candidates):
        rows[j, :x + 1] = div_mask(S, x)
    words = kernels.pack_bitsets(rows)
    best, best_idx, nodes, certified = kernels.min_union_search(
        words, r, ub + 1, max_nodes, backend=backend)
    if not certified or (m_cap is not None and cap < ub + 2 * S.genus - 1):
        if best <= ub:
            value = best
            witness = tuple(candidates[i] for i in best_idx)
        else:
            value, witness = ub, init.elements
        raise BudgetExceeded(
            f"search stopped after {nodes} nodes; best known bound "
            f"{value} (uncertified)",
            best_value=value, witness=witness, nodes=nodes)
    if best <= ub:
        witness = tuple(int(candidates[i]) for i in best_idx)
        value = best
    else:  # the initial configuration was already optimal and lex-least
        witness, value = init.elements, ub
    return FengRaoResult(m, r, value,
                         Configuration(m, witness, value), "search")


# -- amenable sets -------------------------------------------------------------


def _check_mbar(S: NumericalSemigroup, mbar: int) -> None:
    if mbar < 2 * S.conductor - 1:
        raise MbarTooSmall(f"mbar = {mbar} < 2c - 1 = {2 * S.conductor - 1}")


def is_amenable(S: NumericalSemigroup, mbar: int, M: Iterable[int]) -> bool:
    """True iff M contains mbar and is mbar-closed under division.

    Sets reaching outside S n [mbar, oo) are simply not amenable.
    """
    _check_mbar(S, mbar)
    elems = {int(x) for x in M}
    if mbar not in elems:
        return False
    for x in elems:
        if x < mbar or not S.contains(x):
            return False
        for d in div_set(S, x):
            if d >= mbar and d not in elems:
                return False
    return True


def optimal_amenable(S: NumericalSemigroup, mbar: int, r: int) -> Configuration:
    """The r-element amenable configuration D(mbar + rho_r) cut at mbar.

    Its divisor count is mbar + 1 - 2g + rho_r.  For two-generator
    semigroups this is an optimal configuration; for other semigroups it
    is only an upper-bound witness (the minimum can be smaller).
    """
    _check_mbar(S, mbar)
    if r < 1:
        raise DomainError("r must be >= 1")
    ds = div_set(S, mbar + S.rho(r))
    elems = tuple(e for e in ds if e >= mbar)
    assert len(elems) == r
    return Configuration(mbar, elems, len(ds))


def enumerate_amenable_sets(S: NumericalSemigroup, mbar: int, max_elem: int,
                            max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every amenable set within [mbar, max_elem] as a sorted tuple.

    Amenable sets are built by adding elements above the current maximum
    (removing the maximum keeps a set amenable, so this reaches all of
    them exactly once).
    """
    _check_mbar(S, mbar)
    candidates = [x for x in S.elements_in(mbar + 1, max_elem + 1)]
    above = {x: frozenset(d for d in div_set(S, x) if d >= mbar)
             for x in candidates}

    def extend(current: frozenset[int], start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(sorted(current))
        if max_size is not None and len(current) >= max_size:
            return
        for j in range(start, len(candidates)):
            x = candidates[j]
            if above[x] <= current | {x}:
                yield from extend(current | {x}, j + 1)

    yield from extend(frozenset({mbar}), 0)


# -- Feng-Rao numbers -----------------------------------------------------------


def feng_rao_number(S: NumericalSemigroup, r: int, *,
                    method: str = "auto",
                    max_nodes: int = DEFAULT_MAX_NODES,
                    backend: str | None = None) -> FengRaoNumber:
    """E(S, r), the constant with delta_FR^r(m) = m + 1 - 2g + E(S, r)
    for m >= 2c - 1.

    ``method="auto"`` dispatches on closed cases (two generators: rho_r;
    genus 0: r - 1; r >= c: r + g - 1) and falls back to the exact search
    at mbar = 2c - 1; ``method="search"`` forces the search.
    """
    if r < 1:
        raise DomainError("r must be >= 1")
    if method not in ("auto", "search"):
        raise DomainError(f"unknown method {method!r}")
    if method == "auto":
        if S.embedding_dimension == 2:
            return FengRaoNumber(r, S.rho(r), "two-generator-formula")
        if S.genus == 0:
            return FengRaoNumber(r, r - 1, "trivial-semigroup")
        if r >= S.conductor:
            return FengRaoNumber(r, r + S.genus - 1, "large-r-formula")
    mbar = max(2 * S.conductor - 1, 0)
    res = generalized_fr(S, mbar, r, max_nodes=max_nodes, backend=backend)
    value = res.value - (mbar + 1 - 2 * S.genus)
    if S.genus >= 1 and r >= 2:
        assert r <= value <= S.rho(r)
    return FengRaoNumber(r, value, "search")


def coro_final_value(s2, r: int, k: int) -> int:
    """Exact delta_FR^r at m = 2g - 1 + rho_k for <a,b>: rho_r + rho_k."""
    from .dim2 import Dim2Semigroup
    if not isinstance(s2, Dim2Semigroup):
        raise DomainError("only valid for two-generator semigroups")
    if k < 2:
        raise DomainError("k must be >= 2")
    if r < 1:
        raise DomainError("r must be >= 1")
    return s2.base.rho(r) + s2.base.rho(k)


def coro_final_gap_bound(s2, r: int, i: int) -> int:
    """Lower bound rho_r + l_i for delta_FR^r at m = 2g - 1 + l_i, where
    l_i is the i-th gap.  A bound only, not an exact value."""
    from .dim2 import Dim2Semigroup
    if not isinstance(s2, Dim2Semigroup):
        raise DomainError("only valid for two-generator semigroups")
    gaps = s2.base.gaps()
    if not 1 <= i <= len(gaps):
        raise DomainError(f"gap index must be in [1, {len(gaps)}]")
    return s2.base.rho(r) + gaps[i - 1]

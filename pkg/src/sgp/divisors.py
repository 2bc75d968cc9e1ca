"""Divisor sets D(x) = S  intersect  (x - S), unions over several targets,
and the Apery-set routes to the new divisors D(mbar+n) minus D(mbar).

x' divides x when x - x' is in S; D(x) collects the divisors of x inside
S.  For m >= 2c - 1 the count is exactly m + 1 - 2g, and the new divisors
that mbar + n adds to those of mbar are in bijection with the Apery set of
n (s maps to mbar + n - s); for symmetric semigroups the plain shift
s maps to s + mbar - F gives the same set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError, EmptySet, MbarTooSmall, NotSymmetric
from .semigroup import NumericalSemigroup


@dataclass(frozen=True, eq=False)
class DivisorSet:
    """Sorted divisors of a target (or target set) in a semigroup."""
    owner: NumericalSemigroup
    target: int | tuple[int, ...]
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    @property
    def cardinality(self) -> int:
        return len(self.elements)


def div_mask(S: NumericalSemigroup, x: int) -> np.ndarray:
    """Boolean mask over [0, x] of the divisors of x (empty for x < 0)."""
    if x < 0:
        return np.zeros(0, dtype=bool)
    m = S.member_mask(0, x + 1)
    return m & m[::-1]


def div_set(S: NumericalSemigroup, x: int) -> DivisorSet:
    """D(x), sorted; empty when x < 0; contains 0 and x when x in S."""
    elems = tuple(int(d) for d in np.flatnonzero(div_mask(S, x)))
    return DivisorSet(S, x, elems)


def div_set_multi(S: NumericalSemigroup, M: Iterable[int]) -> DivisorSet:
    """D(M) = union of D(m) over m in M, sorted and deduplicated."""
    targets = tuple(sorted({int(m) for m in M}))
    if not targets:
        raise EmptySet("D(M) needs a nonempty target set")
    width = max(targets) + 1
    acc = np.zeros(max(width, 0), dtype=bool)
    for x in targets:
        if x >= 0:
            acc[:x + 1] |= div_mask(S, x)
    elems = tuple(int(d) for d in np.flatnonzero(acc))
    return DivisorSet(S, targets, elems)


def _check_mbar(S: NumericalSemigroup, mbar: int) -> None:
    if mbar < 2 * S.conductor - 1:
        raise MbarTooSmall(
            f"mbar = {mbar} < 2c - 1 = {2 * S.conductor - 1}")


def new_divisors_via_apery(S: NumericalSemigroup, mbar: int, n: int) -> list[int]:
    """D(mbar+n) minus D(mbar) computed as {mbar + n - s : s in Ap(S, n)}.

    Works for any numerical semigroup, not only two-generator ones.
    """
    _check_mbar(S, mbar)
    if n < 0:
        raise DomainError("n must be nonnegative")
    return sorted(mbar + n - s for s in S.apery(n))


def symmetric_shift_divisors(S: NumericalSemigroup, mbar: int, n: int) -> list[int]:
    """D(mbar+n) minus D(mbar) as Ap(S, n) + mbar - F, for symmetric S."""
    if not S.is_symmetric():
        raise NotSymmetric(f"{S!r} is not symmetric (c != 2g)")
    _check_mbar(S, mbar)
    if n < 0:
        raise DomainError("n must be nonnegative")
    return sorted(s + mbar - S.frobenius for s in S.apery(n))

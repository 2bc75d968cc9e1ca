"""Finitely generated numerical semigroups.

A numerical semigroup S is a submonoid of the naturals with finite
complement.  The finitely many positive integers outside S are its gaps;
their number is the genus g.  The conductor c is the least element with
c + N contained in S, and the Frobenius number F = c - 1 is the largest
gap (-1 for S = N).  Elements are enumerated rho_1 = 0 < rho_2 < ..., and
every m >= c is the (m+1-g)-th element.

Membership is backed by a dense boolean table over [0, c + max(gens));
queries beyond the table answer by the rule x >= c  =>  x in S.  All
values are immutable after construction, so instances can be shared
freely across threads.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, EmptyInput, GcdNotOne


def _sieve(gens: Sequence[int], limit: int) -> bytearray:
    # x in S  iff  x = 0 or x - g in S for some generator g
    table = bytearray(limit)
    table[0] = 1
    for x in range(gens[0], limit):
        for g in gens:
            if g > x:
                break
            if table[x - g]:
                table[x] = 1
                break
    return table


def _find_conductor(table: bytearray, run_length: int) -> int | None:
    """Start of the first run of ``run_length`` consecutive members.

    A run of max(gens) consecutive members proves the tail is full, and the
    first such run starts exactly at the conductor.
    """
    run = 0
    for x, v in enumerate(table):
        run = run + 1 if v else 0
        if run == run_length:
            return x - run_length + 1
    return None


class NumericalSemigroup:
    """A numerical semigroup with cached invariants.

    Build one with :meth:`from_generators`.
    """

    __slots__ = ("generators", "minimal_generators", "genus", "conductor",
                 "frobenius", "multiplicity", "_table", "_small_elements")

    generators: tuple[int, ...]
    minimal_generators: tuple[int, ...]
    genus: int
    conductor: int
    frobenius: int
    multiplicity: int

    def __init__(self, generators: tuple[int, ...], table: np.ndarray,
                 conductor: int):
        self.generators = generators
        self.conductor = conductor
        self.frobenius = conductor - 1
        self.genus = int(conductor - np.count_nonzero(table[:conductor]))
        self.multiplicity = generators[0]
        self._table = table
        self._small_elements = np.flatnonzero(table[:conductor])
        self.minimal_generators = tuple(
            g for g in generators if not self._is_reducible(g))

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        """Semigroup generated by ``gens`` (positive integers, gcd 1)."""
        gens_t = tuple(sorted({int(g) for g in gens}))
        if not gens_t:
            raise EmptyInput("at least one generator is required")
        if gens_t[0] < 1:
            raise DomainError("generators must be positive integers")
        if math.gcd(*gens_t) != 1:
            raise GcdNotOne(f"gcd{gens_t} != 1; the complement would be infinite")
        gmax = gens_t[-1]
        limit = 2 * gmax + 2
        while True:
            table = _sieve(gens_t, limit)
            c = _find_conductor(table, gmax)
            if c is not None and c + gmax <= limit:
                break
            limit *= 2
        arr = np.frombuffer(bytes(table[:c + gmax]), dtype=np.uint8).astype(bool)
        arr.flags.writeable = False
        return cls(gens_t, arr, c)

    def _is_reducible(self, g: int) -> bool:
        mu = self.generators[0]
        for s in range(mu, g // 2 + 1):
            if self._table[s] and self._table[g - s]:
                return True
        return False

    # -- membership ---------------------------------------------------------

    def contains(self, x: int) -> bool:
        """True iff x is an element of the semigroup."""
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return bool(self._table[x])

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def member_mask(self, lo: int, hi: int) -> np.ndarray:
        """Boolean membership array for the integer range [lo, hi)."""
        n = hi - lo
        if n <= 0:
            return np.zeros(0, dtype=bool)
        out = np.zeros(n, dtype=bool)
        t = len(self._table)
        # table region
        a = max(lo, 0)
        b = min(hi, t)
        if a < b:
            out[a - lo:b - lo] = self._table[a:b]
        # full tail (table length >= conductor)
        if hi > t:
            out[max(t, lo) - lo:] = True
        return out

    def elements_in(self, lo: int, hi: int) -> list[int]:
        """Sorted elements of S in [lo, hi)."""
        return [int(x) + lo for x in np.flatnonzero(self.member_mask(lo, hi))]

    def next_element(self, x: int) -> int:
        """Smallest element of S that is >= x."""
        if x <= 0:
            return 0
        if x >= self.conductor:
            return x
        while not self._table[x]:
            x += 1
        return x

    # -- invariants and enumeration ----------------------------------------

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def rho(self, k: int) -> int:
        """The k-th smallest element (rho_1 = 0)."""
        if k < 1:
            raise DomainError("rho index must be >= 1")
        small = self._small_elements
        if k <= len(small):
            return int(small[k - 1])
        # m >= c is the (m+1-g)-th element, so rho_k = k + g - 1 here
        return k + self.genus - 1

    def gaps(self) -> list[int]:
        """Sorted gaps; length = genus, maximum = Frobenius number."""
        return [int(x) for x in np.flatnonzero(~self._table[:self.conductor])]

    def apery(self, n: int) -> list[int]:
        """Apery set with respect to an arbitrary integer n.

        {s in S : s - n not in S}, sorted.  Finite for every n; for n in S
        it has exactly n elements.
        """
        # s >= c and s - n >= c imply s is not in the set, so scanning
        # s in [0, max(c, c - n) + |n|] is exhaustive.
        bound = max(self.conductor, self.conductor - n) + abs(n)
        in_s = self.member_mask(0, bound + 1)
        shifted = self.member_mask(-n, bound + 1 - n)
        return [int(s) for s in np.flatnonzero(in_s & ~shifted)]

    def is_symmetric(self) -> bool:
        """True iff r in S <=> c-1-r not in S, equivalently c = 2g."""
        return self.conductor == 2 * self.genus

    # -- misc ----------------------------------------------------------------

    def descriptor(self) -> dict:
        """JSON-ready summary used by the CLI."""
        return {
            "generators": list(self.generators),
            "minimal_generators": list(self.minimal_generators),
            "genus": self.genus,
            "conductor": self.conductor,
            "frobenius": self.frobenius,
            "multiplicity": self.multiplicity,
            "gaps": self.gaps(),
        }

    def __repr__(self) -> str:
        return f"NumericalSemigroup{self.generators}"


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Module-level alias for :meth:`NumericalSemigroup.from_generators`."""
    return NumericalSemigroup.from_generators(gens)

"""Closed formulas and ground/triangle geometry for S = <a,b>, gcd(a,b) = 1.

Every integer n has a unique representation n = u*a + v*b with
0 <= u < b (u = n * a^{-1} mod b); membership is simply v >= 0.  For
nonnegative n there is also the representation n = (i*a mod b) + h*a with
i = (n mod a) * a^{-1} mod b and h = floor(n / a).

For a base point mbar >= 2c - 1 the window {mbar, ..., mbar + b - 1} is
called the ground, written mbar (+) i = mbar + (i*a mod b).  The divisors
of mbar + n at or above mbar form the triangle of n; its intersection
with the ground is the base, an interval of the ground determined by the
(i, h) representation.  All set-returning operations give sorted,
deduplicated lists and raise when called below the proven mbar regime
rather than returning unproven sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (BaseIsWholeGround, DomainError, GcdNotOne,
                     HypothesisViolated, MbarTooSmall)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class UVRep:
    """n = u*a + v*b with 0 <= u < b."""
    u: int
    v: int


@dataclass(frozen=True)
class IHRep:
    """n = (i*a mod b) + h*a with i*a mod b < a, h = floor(n/a)."""
    i: int
    h: int


@dataclass(frozen=True)
class GroundInterval:
    """The ground interval {mbar (+) i, ..., mbar (+) (i+h)}."""
    i: int
    h: int


# change tags for delta_divisors
@dataclass(frozen=True)
class Middle:
    """Insert a middle triangle n2 between n1 and n3."""
    n2: int


@dataclass(frozen=True)
class Extend:
    """Extend the n1 triangle by k steps of a."""
    k: int


@dataclass(frozen=True)
class Multiple:
    """Replace the n1 triangle by the triangle of k*a."""
    k: int


def _lattice(offset: int, a: int, b: int, xs: range, ys: range) -> list[int]:
    """Sorted deduplicated {offset + x*a + y*b : x in xs, y in ys}."""
    if len(xs) == 0 or len(ys) == 0:
        return []
    vals = (offset
            + a * np.asarray(xs, dtype=np.int64)[:, None]
            + b * np.asarray(ys, dtype=np.int64)[None, :])
    return [int(v) for v in np.unique(vals)]


class Dim2Semigroup:
    """The semigroup <a, b> with 2 <= a < b coprime.

    Wraps a generic :class:`NumericalSemigroup` (``base``) and adds the
    closed-form operations.  The bound mbar >= 2c - 1 is a parameter of
    each geometric operation rather than stored state.
    """

    __slots__ = ("a", "b", "a_inv", "c", "g", "base")

    def __init__(self, a: int, b: int):
        a, b = int(a), int(b)
        if a > b:
            a, b = b, a
        if a < 2 or a == b:
            raise DomainError("need two distinct generators >= 2")
        if math.gcd(a, b) != 1:
            raise GcdNotOne(f"gcd({a}, {b}) != 1")
        self.a = a
        self.b = b
        self.a_inv = pow(a, -1, b)
        self.c = a * b - a - b + 1          # Sylvester
        self.g = (a - 1) * (b - 1) // 2     # = c / 2, always symmetric
        self.base = NumericalSemigroup.from_generators((a, b))

    # -- representations ------------------------------------------------------

    def uv_rep(self, n: int) -> UVRep:
        u = (n * self.a_inv) % self.b
        return UVRep(u, (n - u * self.a) // self.b)

    def ih_rep(self, n: int) -> IHRep:
        if n < 0:
            raise DomainError("ih_rep is defined for nonnegative n")
        return IHRep(((n % self.a) * self.a_inv) % self.b, n // self.a)

    def contains_uv(self, n: int) -> bool:
        """Membership via the u,v criterion: n in S iff v >= 0."""
        return self.uv_rep(n).v >= 0

    # -- Apery sets and new divisors ------------------------------------------

    def apery_closed(self, n: int) -> list[int]:
        """Apery set of S with respect to any integer n, in closed form.

        Empty when v < -a; the rectangle {alpha*a + beta*b : alpha < u,
        beta < a+v} when -a <= v < 0 (u(a+v) elements); the union of two
        rectangles when n in S (n elements).
        """
        a, b = self.a, self.b
        rep = self.uv_rep(n)
        u, v = rep.u, rep.v
        if v < -a:
            return []
        if v < 0:
            return _lattice(0, a, b, range(0, u), range(0, a + v))
        low = _lattice(0, a, b, range(0, u), range(0, a + v))
        high = _lattice(0, a, b, range(u, b), range(0, v))
        return sorted(set(low) | set(high))

    def _check_mbar(self, mbar: int) -> None:
        if mbar < 2 * self.c - 1:
            raise MbarTooSmall(
                f"mbar = {mbar} < 2c - 1 = {2 * self.c - 1}; the closed "
                "forms are unproven there, use the generic set difference")

    def new_divisors(self, mbar: int, n: int) -> list[int]:
        """D(mbar + n) minus D(mbar) in closed form, for n >= 0."""
        self._check_mbar(mbar)
        if n < 0:
            raise DomainError("n must be nonnegative")
        a, b = self.a, self.b
        rep = self.uv_rep(n)
        u, v = rep.u, rep.v
        if v < 0:
            return _lattice(mbar, a, b, range(1, u + 1), range(-a + 1, v + 1))
        low = _lattice(mbar, a, b, range(1, u + 1), range(-a + 1, v + 1))
        high = _lattice(mbar, a, b, range(u + 1, b + 1), range(-a + 1, v - a + 1))
        return sorted(set(low) | set(high))

    # -- ground and triangles --------------------------------------------------

    def ground_elem(self, mbar: int, i: int) -> int:
        """mbar (+) i = mbar + (i*a mod b); period b in i."""
        if i < 0:
            raise DomainError("ground index must be nonnegative")
        return mbar + (i * self.a) % self.b

    def ground_divisors(self, mbar: int, i: int) -> list[int]:
        """D(mbar (+) i) minus D(mbar), for 0 <= i < b."""
        self._check_mbar(mbar)
        if not 0 <= i < self.b:
            raise DomainError("ground index must lie in [0, b)")
        a, b = self.a, self.b
        top = -((i * a) // b)
        return _lattice(mbar, a, b, range(1, i + 1), range(-a + 1, top + 1))

    def triangle_base(self, mbar: int, n: int) -> GroundInterval:
        """Base of the triangle of n: the interval (i, h) from the
        (i, h) representation, clamped to the whole ground once h >= b-1."""
        rep = self.ih_rep(n)
        return GroundInterval(rep.i, min(rep.h, self.b - 1))

    def interval_values(self, mbar: int, interval: GroundInterval) -> list[int]:
        """Sorted elements denoted by a ground interval."""
        return sorted({self.ground_elem(mbar, j)
                       for j in range(interval.i, interval.i + interval.h + 1)})

    def interval_indices(self, interval: GroundInterval) -> frozenset[int]:
        """Canonical ground indices (mod b) covered by the interval."""
        return frozenset((interval.i + t) % self.b
                         for t in range(interval.h + 1))

    def is_whole_ground(self, interval: GroundInterval) -> bool:
        return interval.h == self.b - 1

    def is_amenable_interval(self, interval: GroundInterval) -> bool:
        """An interval is amenable iff its start index i has i*a mod b < a."""
        return (interval.i * self.a) % self.b < self.a

    def divides_via_bases(self, mbar: int, n_prime: int, n: int) -> bool:
        """n' divides n (n - n' in S) iff base(n') is contained in base(n).

        Only valid while base(n) is not the whole ground.
        """
        self._check_mbar(mbar)
        base_n = self.triangle_base(mbar, n)
        if self.is_whole_ground(base_n):
            raise BaseIsWholeGround(
                "base(n) is the whole ground; every base is contained in it")
        base_np = self.triangle_base(mbar, n_prime)
        return self.interval_indices(base_np) <= self.interval_indices(base_n)

    # -- triangle rearrangement ------------------------------------------------

    def _prec_violation(self, L: GroundInterval, Lp: GroundInterval) -> str | None:
        """Reason the ordering L < L' fails, or None if it holds.

        Interpreted on canonical ground indices: the intervals must be
        disjoint, L' must avoid the origin, and L' must sit strictly
        between the low run of L and the start of its wrapped part (with a
        gap after the low run), resp. strictly after L with a gap when L
        avoids the origin.
        """
        I, J = self.interval_indices(L), self.interval_indices(Lp)
        if I & J:
            return "intervals overlap"
        if 0 in J:
            return "second interval contains the ground origin mbar"
        if 0 in I:
            low_end = 0
            while low_end + 1 in I:
                low_end += 1
            wrapped = [j for j in I if j > low_end]
            high_start = min(wrapped) if wrapped else self.b
            for j in sorted(J):
                if j <= low_end + 1:
                    return (f"index {j} of the second interval touches the "
                            f"low run of the first (ends at {low_end})")
                if j >= high_start:
                    return (f"index {j} of the second interval reaches the "
                            f"wrapped part of the first (starts at {high_start})")
            return None
        if max(I) + 1 >= min(J):
            return (f"intervals not separated: first ends at index {max(I)}, "
                    f"second starts at {min(J)}")
        return None

    def _require_prec(self, name: str, L: GroundInterval, Lp: GroundInterval) -> None:
        reason = self._prec_violation(L, Lp)
        if reason is not None:
            raise HypothesisViolated(f"{name} fails: {reason}")

    def delta_divisors(self, mbar: int, n1: int,
                       change: Middle | Extend | Multiple,
                       n3: int | None = None) -> list[int]:
        """New divisors contributed by one triangle move, in closed form.

        With D1 = D(mbar, mbar+n1[, mbar+n3]) as context (n1 in S):

        - ``Middle(n2)``: D(mbar+n1, mbar+n2[, mbar+n3]) minus D1,
          the rectangle (u1, u2] x (v3, v2].
        - ``Extend(k)``: D(mbar+n1+k*a[, mbar+n3]) minus D1,
          the rectangle (u1, u1+k] x (v3, v1].
        - ``Multiple(k)``: D(mbar+k*a[, mbar+n3]) minus D1 for k >= u1,
          the rectangle (u1, k] x (v3, 0].

        When n3 is omitted, v3 is replaced by v1 - a.  Raises
        HypothesisViolated naming the interval-ordering condition that
        failed.
        """
        self._check_mbar(mbar)
        a, b = self.a, self.b
        if n1 < 0 or not self.contains_uv(n1):
            raise HypothesisViolated("mbar in L1 fails: n1 is not in S")
        r1 = self.uv_rep(n1)
        u1, v1 = r1.u, r1.v
        L1 = self.triangle_base(mbar, n1)
        if n3 is not None:
            if n3 < 0:
                raise DomainError("n3 must be nonnegative")
            L3 = self.triangle_base(mbar, n3)
            v3 = self.uv_rep(n3).v
        else:
            L3 = None
            v3 = v1 - a

        if isinstance(change, Middle):
            n2 = change.n2
            if n2 < 0:
                raise DomainError("n2 must be nonnegative")
            L2 = self.triangle_base(mbar, n2)
            self._require_prec("L1 < L2", L1, L2)
            if L3 is not None:
                self._require_prec("L2 < L3", L2, L3)
            r2 = self.uv_rep(n2)
            return _lattice(mbar, a, b, range(u1 + 1, r2.u + 1),
                            range(v3 + 1, r2.v + 1))
        if isinstance(change, Extend):
            k = change.k
            if k < 0:
                raise DomainError("k must be nonnegative")
            shifted = self.triangle_base(mbar, n1 + k * a)
            if self.is_whole_ground(shifted):
                raise HypothesisViolated(
                    "base(n1 + k*a) is a proper interval fails: "
                    "the shifted base covers the whole ground")
            if L3 is not None:
                self._require_prec("base(n1 + k*a) < L3", shifted, L3)
                self._require_prec("L1 < L3", L1, L3)
            return _lattice(mbar, a, b, range(u1 + 1, u1 + k + 1),
                            range(v3 + 1, v1 + 1))
        if isinstance(change, Multiple):
            k = change.k
            if k < u1:
                raise HypothesisViolated(
                    f"k >= u1 fails: k = {k} < u1 = {u1}")
            shifted = self.triangle_base(mbar, k * a)
            if self.is_whole_ground(shifted):
                raise HypothesisViolated(
                    "base(k*a) is a proper interval fails: "
                    "k*a covers the whole ground")
            if L3 is not None:
                self._require_prec("base(k*a) < L3", shifted, L3)
                self._require_prec("L1 < L3", L1, L3)
            return _lattice(mbar, a, b, range(u1 + 1, k + 1),
                            range(v3 + 1, 1))
        raise DomainError(f"unknown change tag: {change!r}")

    def __repr__(self) -> str:
        return f"Dim2Semigroup({self.a}, {self.b})"

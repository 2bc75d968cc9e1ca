"""Lower bounds on generalized Hamming weights of one-point codes, and
comparison tables.

For a code C_m in an array with underlying semigroup S, the r-th weight
satisfies d_r(C_m) >= (m+1) + 1 - 2g + E(S, r); with E(S, r) = rho_r for
two-generator semigroups this GFR bound reads m + 2 - 2g + rho_r.  The
competing Griesmer order bound substitutes delta_FR(m+1) for the minimum
distance in the generalized Griesmer bound:

    GOB(m, r, q) = sum_{i=0}^{r-1} ceil(delta_FR(m+1) / q^i).

The GFR row grows by exactly one per step of m; the GOB row comes in
bursts that jump after each element reached by the minimum formula.  All
output is integer-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import BadField, BelowConductor, DomainError, NotInSemigroup, OutOfRange
from .fengrao import DEFAULT_MAX_NODES, _classical_fr_at, feng_rao_number
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class BoundRow:
    m: int
    k_m: int | None
    gfr: int
    gob: int
    winner: str  # "GFR" | "GOB" | "Tie"


@dataclass(frozen=True)
class BoundTable:
    generators: tuple[int, ...]
    r: int
    q: int
    n: int | None
    lo: int
    hi: int
    rows: tuple[BoundRow, ...]
    skipped: tuple[int, ...]  # m in range but not in S

    def to_csv(self) -> str:
        lines = ["m,k_m,gfr,gob,winner"]
        for row in self.rows:
            k = "" if row.k_m is None else str(row.k_m)
            lines.append(f"{row.m},{k},{row.gfr},{row.gob},{row.winner}")
        skipped = ",".join(str(s) for s in self.skipped) if self.skipped else "none"
        lines.append(f"# skipped m (not in S): {skipped}")
        return "\n".join(lines) + "\n"

    def to_markdown(self) -> str:
        """Table with m across the top, one row per bound."""
        header = ["m"] + [str(row.m) for row in self.rows]
        out = ["| " + " | ".join(header) + " |",
               "|" + "---|" * len(header)]
        if self.n is not None:
            out.append("| k_m | " + " | ".join(
                "" if row.k_m is None else str(row.k_m)
                for row in self.rows) + " |")
        out.append("| GFR | " + " | ".join(str(row.gfr) for row in self.rows) + " |")
        out.append("| GOB | " + " | ".join(str(row.gob) for row in self.rows) + " |")
        return "\n".join(out) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "params": {"generators": list(self.generators), "r": self.r,
                       "q": self.q, "n": self.n, "range": [self.lo, self.hi]},
            "rows": [{"m": row.m, "k_m": row.k_m, "gfr": row.gfr,
                      "gob": row.gob, "winner": row.winner}
                     for row in self.rows],
            "skipped": list(self.skipped),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _fr_of_successor(S: NumericalSemigroup, m: int) -> int:
    """delta_FR(m+1); minimum formula on two generators, scan otherwise."""
    if S.embedding_dimension == 2:
        return S.next_element(m + 2 - 2 * S.genus)
    value, _ = _classical_fr_at(S, m + 1)
    return value


def _check_m(S: NumericalSemigroup, m: int) -> None:
    if not S.contains(m):
        raise NotInSemigroup(f"m = {m} is not an element of the semigroup")
    if m + 1 < S.conductor:
        raise BelowConductor(f"m + 1 = {m + 1} < c = {S.conductor}")


def gfr_bound(S: NumericalSemigroup, m: int, r: int, *,
              max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """GFR lower bound m + 2 - 2g + E(S, r) on d_r(C_m), for m+1 >= c."""
    _check_m(S, m)
    if r < 1:
        raise DomainError("r must be >= 1")
    e = feng_rao_number(S, r, max_nodes=max_nodes).value
    return m + 2 - 2 * S.genus + e


def thm_final_literal_bound(S: NumericalSemigroup, m: int,
                            r: int) -> tuple[int, bool]:
    """The literally stated bound delta_FR(m+1) + rho_r, two generators only.

    Returns (value, caveat): the caveat flag is set whenever
    delta_FR(m+1) exceeds m + 2 - 2g, i.e. whenever this literal form
    disagrees with (is larger than) the proof-backed ``gfr_bound``;
    published reference values follow the proof-backed form.
    """
    if S.embedding_dimension != 2:
        raise DomainError("the literal bound uses rho_r as E; two generators only")
    _check_m(S, m)
    if r < 1:
        raise DomainError("r must be >= 1")
    d = _fr_of_successor(S, m)
    return d + S.rho(r), d > m + 2 - 2 * S.genus


def griesmer_order_bound(S: NumericalSemigroup, m: int, r: int, q: int) -> int:
    """Griesmer order bound sum_{i=0}^{r-1} ceil(delta_FR(m+1) / q^i).

    The i = 0 term is delta_FR(m+1) itself, so r = 2 gives d + ceil(d/q).
    """
    if q < 2:
        raise BadField(f"field size must be >= 2, got {q}")
    if r < 1:
        raise DomainError("r must be >= 1")
    _check_m(S, m)
    d = _fr_of_successor(S, m)
    total = 0
    p = 1
    for _ in range(r):
        total += -(-d // p)  # ceil
        p *= q
    return total


def code_dimension(S: NumericalSemigroup, m: int, n: int) -> int:
    """k_m = n - m + g - 1, valid for 2g - 2 < m < n with m in S."""
    if not (2 * S.genus - 2 < m < n) or not S.contains(m):
        raise OutOfRange(
            f"need 2g - 2 < m < n and m in S; got m = {m}, n = {n}")
    return n - m + S.genus - 1


def hierarchy_table(S: NumericalSemigroup, r: int, q: int,
                    m_range: tuple[int, int], n: int | None = None, *,
                    max_nodes: int = DEFAULT_MAX_NODES) -> BoundTable:
    """One row per m in S within [lo, hi]: GFR, GOB, winner, optional k_m.

    Rows for gaps are skipped (and recorded), never zero-filled.
    """
    lo, hi = m_range
    if lo < S.conductor - 1:
        raise BelowConductor(f"lo = {lo} < c - 1 = {S.conductor - 1}")
    if hi < lo:
        raise DomainError(f"empty range [{lo}, {hi}]")
    if q < 2:
        raise BadField(f"field size must be >= 2, got {q}")
    e = feng_rao_number(S, r, max_nodes=max_nodes).value
    rows = []
    skipped = []
    for m in range(lo, hi + 1):
        if not S.contains(m):
            skipped.append(m)
            continue
        gfr = m + 2 - 2 * S.genus + e
        gob = griesmer_order_bound(S, m, r, q)
        k_m = code_dimension(S, m, n) if n is not None else None
        winner = "GFR" if gfr > gob else ("GOB" if gob > gfr else "Tie")
        rows.append(BoundRow(m, k_m, gfr, gob, winner))
    return BoundTable(tuple(S.generators), r, q, n, lo, hi,
                      tuple(rows), tuple(skipped))

"""
Exact rational linear programming.

Two-phase tableau simplex over :class:`fractions.Fraction` with Bland's rule,
for problems in equality form::

    maximize c.x   subject to   A x = b,  x >= 0

Redundant equality rows (common here: the edge equations of a triangulation
are never independent) are detected after phase one and dropped.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence


class Status(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: Status
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, j: int):
        row = self.rows[r]
        piv = row[j]
        if piv != 1:
            self.rows[r] = row = [v / piv for v in row]
            self.rhs[r] /= piv
        for i, other in enumerate(self.rows):
            f = other[j]
            if i == r or f == 0:
                continue
            self.rows[i] = [a - f * b if b else a for a, b in zip(other, row)]
            self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = j

    def run(self, cost: Sequence[Fraction], allowed: int) -> Status:
        """Maximize ``cost`` using columns ``< allowed`` as entering candidates."""
        while True:
            reduced = list(cost)
            for i, b in enumerate(self.basis):
                cb = cost[b]
                if cb:
                    reduced = [rc - cb * a for rc, a in zip(reduced, self.rows[i])]
            entering = next((j for j in range(allowed) if reduced[j] > 0), None)
            if entering is None:
                return Status.OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return Status.UNBOUNDED
            self.pivot(best[1], entering)

    def solution(self, n: int) -> tuple[Fraction, ...]:
        x = [Fraction(0)] * n
        for i, b in enumerate(self.basis):
            if b < n:
                x[b] = self.rhs[i]
        return tuple(x)


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Solve ``max c.x, A x = b, x >= 0`` exactly."""
    m, n = len(A), len(c)
    rows, rhs = [], []
    for row, bi in zip(A, b):
        row = [Fraction(v) for v in row]
        if len(row) != n:
            raise ValueError(f"constraint row has {len(row)} entries, expected {n}")
        bi = Fraction(bi)
        if bi < 0:
            row, bi = [-v for v in row], -bi
        # artificial columns n..n+m-1
        rows.append(row + [Fraction(int(k == len(rows))) for k in range(m)])
        rhs.append(bi)
    tab = _Tableau(rows, rhs, list(range(n, n + m)))

    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    tab.run(phase1, n + m)
    if any(tab.rhs[i] != 0 for i, bv in enumerate(tab.basis) if bv >= n):
        return LPResult(Status.INFEASIBLE)

    # drive zero-level artificials out of the basis; rows that cannot pivot are redundant
    keep = []
    for i in range(m):
        if tab.basis[i] >= n:
            j = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if j is None:
                continue
            tab.pivot(i, j)
        keep.append(i)
    tab.rows = [tab.rows[i][:n] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]

    cost = [Fraction(v) for v in c]
    status = tab.run(cost, n)
    if status is Status.UNBOUNDED:
        return LPResult(status)
    x = tab.solution(n)
    return LPResult(Status.OPTIMAL, x, sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0)))


def feasible_point(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """A vertex of ``{x >= 0 : A x = b}``, or None if the set is empty."""
    n = len(A[0]) if A else 0
    res = maximize([0] * n, A, b)
    return res.x if res.status is Status.OPTIMAL else None


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for j in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][j] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][j] / rows[r][j]
            if f:
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[r])]
        r += 1
    return r

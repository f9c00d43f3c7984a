"""
Angle structures on an ideal triangulation.

Angles are exact rationals in units of pi and live on quadrilateral types:
``alpha[q]`` is the angle at the two edges dual to ``q``.  A generalised angle
structure makes every tetrahedron sum to 1 and every edge class sum to 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .lp import Status, maximize
from .triangulation import SLOT_PAIRS, QuadId, Triangulation, quad_sequence

AngleAssignment = Mapping[QuadId, Fraction]


def slot_label(slot: int) -> str:
    """Dual edge pair of a slot, e.g. ``'e02,e13'``."""
    (a, b), (c, d) = SLOT_PAIRS[slot]
    return f"e{a}{b},e{c}{d}"


_LABEL_SLOT = {slot_label(s): s for s in range(3)}


@dataclass(frozen=True, order=True)
class TautAngleStructure:
    """Per tetrahedron, the slot of the quadrilateral type carrying angle pi."""
    pi_slots: tuple[int, ...]

    def pi_quad(self, tet: int) -> QuadId:
        return QuadId(tet, self.pi_slots[tet])

    def angles(self) -> dict[QuadId, Fraction]:
        return {QuadId(t, s): Fraction(int(s == pi))
                for t, pi in enumerate(self.pi_slots) for s in range(3)}

    def is_pi(self, q: QuadId) -> bool:
        return self.pi_slots[q.tet] == q.slot

    def labels(self) -> list[str]:
        return [slot_label(s) for s in self.pi_slots]

    @classmethod
    def from_labels(cls, labels) -> TautAngleStructure:
        """Build from dual edge pairs such as ``["e02,e13", "e01,e23"]``."""
        slots = []
        for lab in labels:
            key = lab.replace(" ", "").replace("_", "")
            if key not in _LABEL_SLOT:
                # also accept the pair in the other order
                key = ",".join(reversed(key.split(",")))
            if key not in _LABEL_SLOT:
                raise ValueError(f"{lab!r} is not a pair of opposite edges")
            slots.append(_LABEL_SLOT[key])
        return cls(tuple(slots))

    def __str__(self):
        return " | ".join(self.labels())


@dataclass(frozen=True)
class StrictWitness:
    assignment: dict[QuadId, Fraction]
    slack: Fraction


def is_generalised_angle_structure(tri: Triangulation, alpha: AngleAssignment) -> bool:
    missing = [q for q in tri.quads() if q not in alpha]
    if missing:
        raise ValueError(f"no angle given for quad {missing[0]}")
    for t in range(tri.tet_count):
        if sum(Fraction(alpha[QuadId(t, s)]) for s in range(3)) != 1:
            return False
    for e in tri.edges:
        if sum(Fraction(alpha[q]) for q in quad_sequence(tri, e).facing) != 2:
            return False
    return True


def semi_angle_check(tri: Triangulation, alpha: AngleAssignment) -> str:
    """One of ``'taut'``, ``'strict'``, ``'semi'``, ``'generalised'``, ``'invalid'``."""
    if not is_generalised_angle_structure(tri, alpha):
        return "invalid"
    values = [Fraction(alpha[q]) for q in tri.quads()]
    if all(v in (0, 1) for v in values):
        return "taut"
    if all(0 < v < 1 for v in values):
        return "strict"
    if all(0 <= v <= 1 for v in values):
        return "semi"
    return "generalised"


def enumerate_taut_angle_structures(tri: Triangulation) -> list[TautAngleStructure]:
    """
    All taut angle structures, in lexicographic order of the per-tetrahedron
    slot tuple.  Backtracks over tetrahedra, tracking how many pi angles each
    edge class has received and how many corners are still undecided.
    """
    n = tri.tet_count
    ne = len(tri.edges)
    # pi_edges[t][s]: edge classes of the two edges dual to slot s of tetrahedron t
    pi_edges = [[[tri.edge_class_of(t, *pair) for pair in SLOT_PAIRS[s]] for s in range(3)]
                for t in range(n)]
    remaining = [0] * ne
    for e in tri.edges:
        remaining[e.id] = e.degree
    count = [0] * ne
    chosen: list[int] = []
    out = []

    def extend(t: int):
        if t == n:
            out.append(TautAngleStructure(tuple(chosen)))
            return
        touched = [tri.edge_class_of(t, *pair) for s in range(3) for pair in SLOT_PAIRS[s]]
        for e in touched:
            remaining[e] -= 1
        for s in range(3):
            for e in pi_edges[t][s]:
                count[e] += 1
            if all(count[e] <= 2 and count[e] + remaining[e] >= 2 for e in touched):
                chosen.append(s)
                extend(t + 1)
                chosen.pop()
            for e in pi_edges[t][s]:
                count[e] -= 1
        for e in touched:
            remaining[e] += 1

    extend(0)
    return out


def strict_angle_structure(tri: Triangulation) -> StrictWitness | None:
    """
    Decide whether a strict angle structure exists by maximizing the smallest
    angle.  Writing each angle as ``alpha_q = s_q + m`` with ``s_q, m >= 0``,
    maximize ``m`` subject to the tetrahedron and edge equations; a strict
    structure exists iff the optimum is positive.  (Restricting ``m >= 0`` only
    loses instances whose optimum is non-positive anyway.)
    """
    quads = tri.quads()
    col = {q: k for k, q in enumerate(quads)}
    nv = len(quads) + 1
    m = nv - 1
    A, b = [], []
    for t in range(tri.tet_count):
        row = [0] * nv
        for s in range(3):
            row[col[QuadId(t, s)]] = 1
        row[m] = 3
        A.append(row)
        b.append(1)
    for e in tri.edges:
        row = [0] * nv
        for q in quad_sequence(tri, e).facing:
            row[col[q]] += 1
        row[m] = e.degree
        A.append(row)
        b.append(2)
    cost = [0] * m + [1]
    res = maximize(cost, A, b)
    if res.status is not Status.OPTIMAL or res.value <= 0:
        return None
    x = res.x
    assignment = {q: x[col[q]] + x[m] for q in quads}
    return StrictWitness(assignment, min(assignment.values()))

"""
Q-matching equations and the vertical-solution test.

For an edge with facing quads ``q_1, ..., q_k`` the matching equation adds
``+x`` for ``tau(q_i)`` and ``-x`` for ``tau^2(q_i)``, one pair per corner.
Relative to a taut angle structure the pi quad of a tetrahedron is
horizontal, ``tau`` of it vertical-1 and ``tau^2`` of it vertical-2.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .angles import (
    AngleAssignment, TautAngleStructure, enumerate_taut_angle_structures, strict_angle_structure)
from .lp import feasible_point, rank
from .taut_veering import VeeringColouring, _check_taut, colour_demands
from .triangulation import QuadId, Triangulation, quad_sequence, tau, tau2


class QuadClass(Enum):
    HORIZONTAL = "H"
    VERTICAL1 = "V1"
    VERTICAL2 = "V2"


@dataclass(frozen=True)
class QMatchingSystem:
    quads: tuple[QuadId, ...]
    matrix: tuple[tuple[int, ...], ...]  # one row per edge class

    def column(self, q: QuadId) -> int:
        return self.quads.index(q)

    def apply(self, x: Mapping[QuadId, Fraction]) -> list[Fraction]:
        return [sum((row[j] * Fraction(x.get(q, 0)) for j, q in enumerate(self.quads)), Fraction(0))
                for row in self.matrix]

    def kernel_dimension(self) -> int:
        return len(self.quads) - rank(self.matrix)

    def to_text(self) -> str:
        header = ["", *(str(q) for q in self.quads)]
        rows = [[f"e{k}", *(str(v) for v in row)] for k, row in enumerate(self.matrix)]
        width = max(len(cell) for line in [header, *rows] for cell in line)
        return "\n".join(" ".join(cell.rjust(width) for cell in line) for line in [header, *rows]) + "\n"


@dataclass(frozen=True)
class QSolution:
    x: dict[QuadId, Fraction]

    @property
    def support(self) -> list[QuadId]:
        return [q for q, v in self.x.items() if v != 0]


def build_q_system(tri: Triangulation) -> QMatchingSystem:
    quads = tuple(tri.quads())
    col = {q: j for j, q in enumerate(quads)}
    matrix = []
    for e in tri.edges:
        row = [0] * len(quads)
        for q in quad_sequence(tri, e).facing:
            row[col[tau(q)]] += 1
            row[col[tau2(q)]] -= 1
        matrix.append(tuple(row))
    return QMatchingSystem(quads, tuple(matrix))


def classify_quads(tri: Triangulation, taut: TautAngleStructure) -> dict[QuadId, QuadClass]:
    _check_taut(tri, taut)
    out = {}
    for t in range(tri.tet_count):
        h = taut.pi_quad(t)
        out[h] = QuadClass.HORIZONTAL
        out[tau(h)] = QuadClass.VERTICAL1
        out[tau2(h)] = QuadClass.VERTICAL2
    return out


def formal_euler(alpha: AngleAssignment, x: Mapping[QuadId, Fraction]) -> Fraction:
    """chi*(x) = -sum alpha(q) x_q, with alpha in units of pi."""
    extra = [q for q in x if q not in alpha]
    if extra:
        raise ValueError(f"quad {extra[0]} has a coordinate but no angle")
    return -sum((Fraction(alpha[q]) * Fraction(v) for q, v in x.items()), Fraction(0))


def vertical_only_solution(tri: Triangulation, taut: TautAngleStructure) -> QSolution | None:
    """
    A non-negative solution of the Q-matching equations supported on vertical
    quads and normalised to total weight 1, if one exists.
    """
    classes = classify_quads(tri, taut)
    system = build_q_system(tri)
    vertical = [j for j, q in enumerate(system.quads) if classes[q] is not QuadClass.HORIZONTAL]
    A = [[row[j] for j in vertical] for row in system.matrix]
    A.append([1] * len(vertical))
    b = [0] * len(system.matrix) + [1]
    point = feasible_point(A, b)
    if point is None:
        return None
    x = {q: Fraction(0) for q in system.quads}
    for j, v in zip(vertical, point):
        x[system.quads[j]] = v
    return QSolution(x)


def strictness_cross_check(tri: Triangulation, taut: TautAngleStructure | None = None) -> bool:
    """
    No vertical solution should imply a strict angle structure.  Checked for
    the given taut structure, or for every one the triangulation has.
    """
    if taut is None:
        structures = enumerate_taut_angle_structures(tri)
    else:
        structures = [taut]
    if not structures:
        return True
    if any(vertical_only_solution(tri, s) is None for s in structures):
        return strict_angle_structure(tri) is not None
    return True


def property_star_check(tri: Triangulation, taut: TautAngleStructure, colouring: VeeringColouring) -> bool:
    """
    Take an edge and a zero-angle quad facing it whose tetrahedron has both pi
    edges of the edge's colour (so four edges of that colour).  Then that quad
    is a whole side of the edge: its neighbours in the sequence are pi quads.
    """
    _check_taut(tri, taut)
    colours = colouring.colours
    if len(colours) != len(tri.edges):
        raise ValueError("colouring does not fit the triangulation")
    if any(colours[e] != want for e, want, _ in colour_demands(tri, taut)):
        raise ValueError("colouring is not a veering colouring for this taut angle structure")
    pi_colour = []
    for t in range(tri.tet_count):
        (a, b), (c, d) = taut.pi_quad(t).dual_edges
        e1, e2 = tri.edge_class_of(t, a, b), tri.edge_class_of(t, c, d)
        pi_colour.append(colours[e1] if colours[e1] == colours[e2] else None)
    for e in tri.edges:
        seq = quad_sequence(tri, e).facing
        k = len(seq)
        for i, q in enumerate(seq):
            if taut.is_pi(q) or pi_colour[q.tet] != colours[e.id]:
                continue
            if not (taut.is_pi(seq[(i - 1) % k]) and taut.is_pi(seq[(i + 1) % k])):
                return False
    return True

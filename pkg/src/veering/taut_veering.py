"""
Taut structures (face coorientations) and veering colourings for a given
taut angle structure.

Conventions.  In a tetrahedron whose pi quad is ``q``, the edges dual to
``tau(q)`` are blue (left-veering) and those dual to ``tau^2(q)`` are red
(right-veering).  A coorientation is recorded per tetrahedron face as
``True`` when it points into the tetrahedron.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .angles import TautAngleStructure, enumerate_taut_angle_structures, strict_angle_structure
from .triangulation import (
    EDGES, SLOT_PAIRS, Triangulation, is_odd, quad_sequence, tau, tau2)

RED, BLUE = "R", "B"


@dataclass(frozen=True)
class VeeringColouring:
    colours: tuple[str, ...]
    # edges with no colour demand from any tetrahedron, coloured red by default
    flagged: tuple[int, ...] = ()

    def swapped(self) -> VeeringColouring:
        return VeeringColouring(tuple(RED if c == BLUE else BLUE for c in self.colours), self.flagged)


@dataclass(frozen=True)
class TautStructure:
    inward: tuple[tuple[bool, bool, bool, bool], ...]

    def induced_angle(self, tet: int, a: int, b: int) -> int:
        """1 (pi) if the two faces at edge ab agree, else 0."""
        c, d = (v for v in range(4) if v not in (a, b))
        return int(self.inward[tet][c] == self.inward[tet][d])


def _check_taut(tri: Triangulation, taut: TautAngleStructure):
    if len(taut.pi_slots) != tri.tet_count or any(s not in (0, 1, 2) for s in taut.pi_slots):
        raise ValueError("taut angle structure does not match the triangulation")
    for e in tri.edges:
        if sum(taut.is_pi(q) for q in quad_sequence(tri, e).facing) != 2:
            raise ValueError(f"edge {e.id} does not have exactly two pi angles")


def colour_demands(tri: Triangulation, taut: TautAngleStructure):
    """Yield (edge class, colour, tetrahedron) for every colour a tetrahedron forces."""
    for t in range(tri.tet_count):
        q = taut.pi_quad(t)
        for colour, quad in ((BLUE, tau(q)), (RED, tau2(q))):
            for a, b in SLOT_PAIRS[quad.slot]:
                yield tri.edge_class_of(t, a, b), colour, t


def find_veering_colouring(tri: Triangulation, taut: TautAngleStructure) -> VeeringColouring | None:
    _check_taut(tri, taut)
    colours: list[str | None] = [None] * len(tri.edges)
    for e, colour, _ in colour_demands(tri, taut):
        if colours[e] is None:
            colours[e] = colour
        elif colours[e] != colour:
            return None
    flagged = tuple(e for e, c in enumerate(colours) if c is None)
    return VeeringColouring(tuple(c or RED for c in colours), flagged)


def find_taut_structures(tri: Triangulation, taut: TautAngleStructure) -> list[TautStructure]:
    """
    All face coorientations inducing ``taut``.  Each constraint says two face
    sides agree or disagree: the faces at a pi edge agree, the two pairs
    disagree with each other, and the two sides of a glued face disagree.
    Solved by parity propagation; every connected component contributes a
    free global flip.
    """
    _check_taut(tri, taut)
    n = tri.tet_count
    adj: dict[tuple[int, int], list[tuple[tuple[int, int], int]]] = {
        (t, i): [] for t in range(n) for i in range(4)}

    def relate(x, y, differ):
        adj[x].append((y, differ))
        adj[y].append((x, differ))

    for t in range(n):
        (a, b), (c, d) = SLOT_PAIRS[taut.pi_slots[t]]
        # faces containing edge ab are those opposite c and d
        relate((t, c), (t, d), 0)
        relate((t, a), (t, b), 0)
        relate((t, a), (t, c), 1)
        for i, (u, p) in enumerate(tri.gluings[t]):
            if (t, i) <= (u, p[i]):
                relate((t, i), (u, p[i]), 1)

    value: dict[tuple[int, int], int] = {}
    roots = []
    for start in adj:
        if start in value:
            continue
        roots.append(start)
        value[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y, differ in adj[x]:
                want = value[x] ^ differ
                if y not in value:
                    value[y] = want
                    stack.append(y)
                elif value[y] != want:
                    return []

    comp: dict[tuple[int, int], int] = {}
    for k, r in enumerate(roots):
        stack = [r]
        comp[r] = k
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y not in comp:
                    comp[y] = k
                    stack.append(y)

    out = []
    for flips in product((0, 1), repeat=len(roots)):
        inward = tuple(
            tuple(bool(value[(t, i)] ^ flips[comp[(t, i)]]) for i in range(4)) for t in range(n))
        ts = TautStructure(inward)
        if _is_taut(tri, taut, ts):
            out.append(ts)
    return out


def taut_tetrahedron_coorientations(slot: int) -> list[tuple[bool, bool, bool, bool]]:
    """
    Coorientations of a lone tetrahedron, two faces in and two out, whose
    induced pi edges are the pair dual to ``slot``.
    """
    out = []
    for inward in product((False, True), repeat=4):
        if sum(inward) != 2:
            continue
        lone = TautStructure((inward,))
        if [e for e in EDGES if lone.induced_angle(0, *e)] == list(SLOT_PAIRS[slot]):
            out.append(inward)
    return out


def _is_taut(tri: Triangulation, taut: TautAngleStructure, ts: TautStructure) -> bool:
    for t in range(tri.tet_count):
        if ts.inward[t] not in taut_tetrahedron_coorientations(taut.pi_slots[t]):
            return False
        for i, (u, p) in enumerate(tri.gluings[t]):
            if ts.inward[t][i] == ts.inward[u][p[i]]:
                return False
    return True


def one_sided_degrees(tri: Triangulation, taut: TautAngleStructure, e) -> tuple[int, int]:
    """Lengths of the two runs of zero-angle quads between the pi quads, in walk order."""
    seq = quad_sequence(tri, e).facing
    pis = [k for k, q in enumerate(seq) if taut.is_pi(q)]
    if len(pis) != 2:
        raise ValueError(f"edge {quad_sequence(tri, e).edge} has {len(pis)} pi angles, expected 2")
    i, j = pis
    return j - i - 1, len(seq) - (j - i) - 1


def veers_right(x: int, y: int, low: int, high: int) -> bool:
    """
    Handedness of an edge ``{x, y}`` with angle zero in a taut tetrahedron,
    seen from the edge: ``low`` is the vertex opposite it in the lower face,
    ``high`` in the upper face, and ``x`` the end joined to ``high`` by the
    top diagonal.  Moving from ``low`` up to ``high`` is a step to the right
    exactly when ``(x, y, low, high)`` is an odd relabelling of ``(0, 1, 2, 3)``
    in a positively oriented tetrahedron.
    """
    return is_odd((x, y, low, high))


def check_agol_ordering(tri: Triangulation, taut_structure: TautStructure,
                        colouring: VeeringColouring) -> bool:
    """
    Walk the triangles on each side of each edge upwards and check the
    opposite vertices move right for red edges and left for blue ones.

    Around an edge the walk passes the lower pi tetrahedron (both faces at
    the edge outward), the zero-angle tetrahedra of one side stacked upwards,
    the upper pi tetrahedron (both faces inward), and the other side stacked
    downwards.  Each zero-angle tetrahedron contributes one step between its
    lower and upper triangle at the edge.
    """
    if len(colouring.colours) != len(tri.edges) or len(taut_structure.inward) != tri.tet_count:
        raise ValueError("taut structure and colouring do not fit the triangulation")
    inward = taut_structure.inward
    for e in tri.edges:
        k = e.degree
        kinds = []
        for c in e.corners:
            # entered through the face opposite d, left through the face opposite c
            a_in, a_out = inward[c.tet][c.d], inward[c.tet][c.c]
            if a_in == a_out:
                kinds.append("top" if a_in else "bottom")
            else:
                kinds.append("up" if a_in else "down")
        if kinds.count("top") != 1 or kinds.count("bottom") != 1:
            return False
        # from the lower pi tetrahedron, one side is walked forwards (all
        # "up") and the other backwards (all "down") until the upper one
        lo = kinds.index("bottom")
        fwd, pos = [], (lo + 1) % k
        while kinds[pos] != "top":
            fwd.append(kinds[pos])
            pos = (pos + 1) % k
        bwd, pos = [], (lo - 1) % k
        while kinds[pos] != "top":
            bwd.append(kinds[pos])
            pos = (pos - 1) % k
        if any(s != "up" for s in fwd) or any(s != "down" for s in bwd):
            return False
        want_right = colouring.colours[e.id] == RED
        for c, kind in zip(e.corners, kinds):
            if kind not in ("up", "down"):
                continue
            # the lower face is the inward one; the face opposite d meets
            # the edge's link at c, the face opposite c at d
            low_v, high_v = (c.c, c.d) if kind == "up" else (c.d, c.c)
            top_pair = _top_diagonal(inward[c.tet])
            x = c.a if frozenset((c.a, high_v)) == top_pair else c.b
            y = c.b if x == c.a else c.a
            if frozenset((x, high_v)) != top_pair:
                return False
            if veers_right(x, y, low_v, high_v) != want_right:
                return False
    return True


def _top_diagonal(inward: tuple[bool, bool, bool, bool]) -> frozenset[int]:
    """The edge shared by the two outward faces: spanned by the vertices opposite the inward ones."""
    return frozenset(v for v in range(4) if inward[v])


@dataclass
class StructureReport:
    taut_angle: TautAngleStructure
    veering: bool
    taut: bool
    strict: bool
    colours: tuple[str, ...] | None = None
    flags: list[str] = field(default_factory=list)
    one_sided_degrees: list[tuple[int, int]] = field(default_factory=list)


@dataclass
class VeeringReport:
    tet_count: int
    edge_degrees: list[int]
    strict: bool
    slack: Fraction | None
    structures: list[StructureReport]

    @property
    def counts(self) -> dict[str, int]:
        s = self.structures
        return {
            "taut_angle_structures": len(s),
            "taut": sum(r.taut for r in s),
            "veering": sum(r.veering for r in s),
            "taut_and_veering": sum(r.taut and r.veering for r in s),
        }


def veering_report(tri: Triangulation) -> VeeringReport:
    structures = enumerate_taut_angle_structures(tri)
    witness = strict_angle_structure(tri)
    reports = []
    for taut in structures:
        col = find_veering_colouring(tri, taut)
        taut_structs = find_taut_structures(tri, taut)
        flags = [f"edge {e} undemanded, coloured R by default" for e in (col.flagged if col else ())]
        reports.append(StructureReport(
            taut_angle=taut,
            veering=col is not None,
            taut=bool(taut_structs),
            strict=witness is not None,
            colours=col.colours if col else None,
            flags=flags,
            one_sided_degrees=[one_sided_degrees(tri, taut, e) for e in tri.edges],
        ))
    return VeeringReport(
        tet_count=tri.tet_count,
        edge_degrees=[e.degree for e in tri.edges],
        strict=witness is not None,
        slack=witness.slack if witness else None,
        structures=reports,
    )

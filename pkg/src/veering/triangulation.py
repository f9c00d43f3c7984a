"""
Ideal triangulations given by face pairings.

A triangulation with ``n`` tetrahedra is stored as a table of gluings: face
``i`` of tetrahedron ``t`` (the face opposite vertex ``i``) is glued to
tetrahedron ``u`` by a permutation ``p`` of ``{0, 1, 2, 3}``, vertex ``j`` of
``t`` going to vertex ``p[j]`` of ``u``.  Everything downstream (edge walks,
quadrilateral sequences, vertex links) works purely on these tuples, so
singular tetrahedra are handled for free.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import NamedTuple

Perm = tuple[int, int, int, int]

IDENTITY: Perm = (0, 1, 2, 3)
# relabelling applied to a tetrahedron to reverse its orientation
SWAP01: Perm = (1, 0, 2, 3)

EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {frozenset(e): k for k, e in enumerate(EDGES)}

# slot s is the quadrilateral type disjoint from edges {0, s+1} and its opposite
SLOT_NAMES = ("Q01_23", "Q02_13", "Q03_12")
SLOT_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


class TriangulationError(ValueError):
    """The gluing data does not describe a valid ideal triangulation."""


class NonOrientableError(TriangulationError):
    pass


def compose(p: Perm, q: Perm) -> Perm:
    """``p o q``: apply ``q`` first."""
    return tuple(p[q[i]] for i in range(4))


def inverse(p: Perm) -> Perm:
    inv = [0] * 4
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_odd(p: Perm) -> bool:
    inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
    return inversions % 2 == 1


def perm_to_str(p: Perm) -> str:
    return "".join(str(d) for d in p)


def edge_slot(a: int, b: int) -> int:
    """Slot of the quadrilateral type dual to the edge ``{a, b}``."""
    if a == 0:
        return b - 1
    if b == 0:
        return a - 1
    return 6 - a - b - 1


class QuadId(NamedTuple):
    tet: int
    slot: int

    def __str__(self):
        return f"{self.tet}:{SLOT_NAMES[self.slot]}"

    @property
    def dual_edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return SLOT_PAIRS[self.slot]


class Corner(NamedTuple):
    """
    One tetrahedron-edge of an edge class, seen in the frame of the walk.

    The edge is ``{a, b}``; the walk arrives through the face opposite ``d``
    and leaves through the face opposite ``c``.
    """
    tet: int
    a: int
    b: int
    c: int
    d: int

    @property
    def edge(self) -> int:
        return EDGE_INDEX[frozenset((self.a, self.b))]

    @property
    def quad(self) -> QuadId:
        return QuadId(self.tet, edge_slot(self.a, self.b))


@dataclass(frozen=True)
class EdgeClass:
    id: int
    corners: tuple[Corner, ...]

    @property
    def degree(self) -> int:
        return len(self.corners)


@dataclass(frozen=True)
class QuadSequence:
    edge: int
    facing: tuple[QuadId, ...]


@dataclass(frozen=True)
class Triangulation:
    gluings: tuple[tuple[tuple[int, Perm], ...], ...]
    # tetrahedra relabelled by orient(); not part of the identity of the object
    flipped: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        gl = tuple(
            tuple((int(u), tuple(int(v) for v in p)) for u, p in row)
            for row in self.gluings)
        object.__setattr__(self, "gluings", gl)
        self._validate()

    def _validate(self):
        n = len(self.gluings)
        if n == 0:
            raise TriangulationError("a triangulation needs at least one tetrahedron")
        valid = set(permutations(range(4)))
        for t, row in enumerate(self.gluings):
            if len(row) != 4:
                raise TriangulationError(f"tetrahedron {t} has {len(row)} faces, expected 4")
            for i, (u, p) in enumerate(row):
                if not 0 <= u < n:
                    raise TriangulationError(
                        f"face {i} of tetrahedron {t} glued to tetrahedron {u}, out of range 0..{n - 1}")
                if p not in valid:
                    raise TriangulationError(f"face {i} of tetrahedron {t}: {p} is not a permutation")
        for t, row in enumerate(self.gluings):
            for i, (u, p) in enumerate(row):
                back_u, back_p = self.gluings[u][p[i]]
                if back_u != t or back_p != inverse(p):
                    raise TriangulationError(
                        f"gluing of face {i} of tetrahedron {t} is not involutive: "
                        f"face {p[i]} of tetrahedron {u} does not glue back by the inverse")

    @property
    def tet_count(self) -> int:
        return len(self.gluings)

    def glue(self, tet: int, face: int) -> tuple[int, Perm]:
        return self.gluings[tet][face]

    def quads(self) -> list[QuadId]:
        return [QuadId(t, s) for t in range(self.tet_count) for s in range(3)]

    def is_oriented(self) -> bool:
        return all(is_odd(p) for row in self.gluings for _, p in row)

    @cached_property
    def edges(self) -> tuple[EdgeClass, ...]:
        return tuple(_walk_edges(self))

    @cached_property
    def edge_of(self) -> dict[tuple[int, int], int]:
        """Map (tetrahedron, edge index in EDGES) to its edge class id."""
        return {(c.tet, c.edge): e.id for e in self.edges for c in e.corners}

    @cached_property
    def faces(self) -> dict[tuple[int, int], int]:
        """Map each (tetrahedron, face) to the id of the triangle it lies in."""
        ids: dict[tuple[int, int], int] = {}
        for t in range(self.tet_count):
            for i in range(4):
                if (t, i) in ids:
                    continue
                u, p = self.gluings[t][i]
                ids[(t, i)] = ids[(u, p[i])] = len(set(ids.values()))
        return ids

    def edge_class_of(self, tet: int, a: int, b: int) -> int:
        return self.edge_of[(tet, EDGE_INDEX[frozenset((a, b))])]


def _walk_edges(tri: Triangulation) -> list[EdgeClass]:
    seen: set[tuple[int, int]] = set()
    classes = []
    for t in range(tri.tet_count):
        for a, b in EDGES:
            if (t, EDGE_INDEX[frozenset((a, b))]) in seen:
                continue
            c, d = (v for v in range(4) if v not in (a, b))
            start = Corner(t, a, b, c, d)
            corners = []
            state = start
            while True:
                key = (state.tet, state.edge)
                if key in seen:
                    raise TriangulationError(
                        f"edge {a}{b} of tetrahedron {t} is identified with itself in reverse")
                seen.add(key)
                corners.append(state)
                u, p = tri.gluings[state.tet][state.c]
                state = Corner(u, p[state.a], p[state.b], p[state.d], p[state.c])
                if state == start:
                    break
            classes.append(EdgeClass(len(classes), tuple(corners)))
    return classes


def edge_classes(tri: Triangulation) -> list[EdgeClass]:
    return list(tri.edges)


def tau(q: QuadId) -> QuadId:
    """Orientation-induced cyclic order Q01_23 -> Q02_13 -> Q03_12 -> Q01_23."""
    return QuadId(q.tet, (q.slot + 1) % 3)


def tau2(q: QuadId) -> QuadId:
    return QuadId(q.tet, (q.slot + 2) % 3)


def quad_sequence(tri: Triangulation, e: EdgeClass | int) -> QuadSequence:
    if isinstance(e, int):
        e = tri.edges[e]
    return QuadSequence(e.id, tuple(c.quad for c in e.corners))


def relabel(tri: Triangulation, relabelling: dict[int, Perm]) -> Triangulation:
    """
    Rename the vertices of some tetrahedra: vertex ``v`` of tetrahedron ``t``
    becomes vertex ``relabelling[t][v]``.
    """
    r = [relabelling.get(t, IDENTITY) for t in range(tri.tet_count)]
    new = [[None] * 4 for _ in range(tri.tet_count)]
    for t, row in enumerate(tri.gluings):
        rinv = inverse(r[t])
        for i, (u, p) in enumerate(row):
            new[t][r[t][i]] = (u, compose(r[u], compose(p, rinv)))
    return Triangulation(tuple(tuple(row) for row in new))


def orientation_flips(tri: Triangulation) -> list[bool]:
    """
    Decide, tetrahedron by tetrahedron, whether to reverse its labelling so
    that every face pairing becomes odd.  Each component keeps the labelling
    of its lowest-numbered tetrahedron.
    """
    flip: list[bool | None] = [None] * tri.tet_count
    for root in range(tri.tet_count):
        if flip[root] is not None:
            continue
        flip[root] = False
        queue = deque([root])
        while queue:
            t = queue.popleft()
            for i, (u, p) in enumerate(tri.gluings[t]):
                want = flip[t] ^ (not is_odd(p))
                if flip[u] is None:
                    flip[u] = want
                    queue.append(u)
                elif flip[u] != want:
                    raise NonOrientableError(
                        f"orientation-reversing loop through face {i} of tetrahedron {t}")
    return flip


def orient(tri: Triangulation) -> Triangulation:
    flips = orientation_flips(tri)
    flipped = tuple(t for t, f in enumerate(flips) if f)
    if not flipped:
        return tri
    out = relabel(tri, {t: SWAP01 for t in flipped})
    object.__setattr__(out, "flipped", flipped)
    return out


def mirror(tri: Triangulation) -> Triangulation:
    """Reverse the orientation of every tetrahedron (a coherent input stays coherent)."""
    return relabel(tri, {t: SWAP01 for t in range(tri.tet_count)})


def vertex_classes(tri: Triangulation) -> list[list[tuple[int, int]]]:
    parent = {(t, v): (t, v) for t in range(tri.tet_count) for v in range(4)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, row in enumerate(tri.gluings):
        for i, (u, p) in enumerate(row):
            for v in range(4):
                if v != i:
                    ra, rb = find((t, v)), find((u, p[v]))
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
    groups: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for key in sorted(parent):
        groups.setdefault(find(key), []).append(key)
    return list(groups.values())


def vertex_links(tri: Triangulation) -> list[tuple[list[tuple[int, int]], int]]:
    """
    Euler characteristic of the link of each ideal vertex, as V - E + F of
    the triangulated link: one triangle per tetrahedron corner, one vertex per
    end of an edge class.
    """
    classes = vertex_classes(tri)
    where = {corner: k for k, cls in enumerate(classes) for corner in cls}
    ends = [0] * len(classes)
    for e in tri.edges:
        c = e.corners[0]
        ends[where[(c.tet, c.a)]] += 1
        ends[where[(c.tet, c.b)]] += 1
    out = []
    for k, cls in enumerate(classes):
        f = len(cls)
        out.append((cls, ends[k] - 3 * f // 2 + f))
    return out

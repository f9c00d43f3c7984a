"""
Layered triangulations of once-punctured torus bundles.

The punctured torus is drawn in its universal cover with the puncture at the
integer lattice points.  A triangulation is a basis ``(a, b)`` together with
the edges ``a, b, a + b``; ``R`` replaces the basis by ``(a, a + b)`` and
``L`` by ``(a + b, b)``, each by one diagonal exchange.  Every exchange is
realised by a tetrahedron whose bottom faces are the two old triangles and
whose top faces are the two new ones.  After the whole word the top
triangulation is the image of the starting one under the monodromy
``M = prod(letters)``, and gluing it back to the bottom closes the bundle.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .angles import TautAngleStructure
from .triangulation import Triangulation, edge_slot, inverse

Point = tuple[int, int]


class DegenerateWordError(ValueError):
    pass


@dataclass(frozen=True)
class MonodromyWord:
    letters: str

    def __post_init__(self):
        letters = self.letters.upper()
        if not letters or set(letters) - {"R", "L"}:
            raise ValueError(f"monodromy word must be a nonempty string over R, L; got {self.letters!r}")
        if len(set(letters)) < 2:
            raise DegenerateWordError(
                f"word {letters!r} uses a single letter; the bundle is not pseudo-Anosov")
        object.__setattr__(self, "letters", letters)

    def __str__(self):
        return self.letters

    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        m = ((1, 0), (0, 1))
        for ch in self.letters:
            g = ((1, 1), (0, 1)) if ch == "R" else ((1, 0), (1, 1))
            m = tuple(tuple(sum(m[i][k] * g[k][j] for k in range(2)) for j in range(2)) for i in range(2))
        return m


def _add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def _neg(p: Point) -> Point:
    return (-p[0], -p[1])


def _normalise(points) -> tuple[tuple[Point, ...], Point]:
    """Translate a lattice triangle so its least point is the origin."""
    base = min(points)
    return tuple(sorted((p[0] - base[0], p[1] - base[1]) for p in points)), base


def _det3(u, v, w) -> int:
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


def layered_ptb(word: MonodromyWord | str) -> tuple[Triangulation, TautAngleStructure]:
    """One tetrahedron per letter; the pi quad of each is dual to its two diagonals."""
    if isinstance(word, str):
        word = MonodromyWord(word)
    n = len(word.letters)
    gluings: list[list] = [[None] * 4 for _ in range(n)]
    pi_slots = []

    # key of a current triangle -> (tet, face, {normalised point: vertex label})
    top: dict = {}
    bottom0: dict = {}
    a, b = (1, 0), (0, 1)
    for t, letter in enumerate(word.letters):
        f, g = (b, a) if letter == "R" else (a, b)
        # bottom diagonal 0 -> f, top diagonal -g -> f + g
        points = [(0, 0), f, _neg(g), _add(f, g)]
        height = [-1, -1, 1, 1]
        labels = [0, 1, 2, 3]
        lifted = [(p[0], p[1], h) for p, h in zip(points, height)]
        vecs = [tuple(lifted[k][i] - lifted[0][i] for i in range(3)) for k in (1, 2, 3)]
        if _det3(*vecs) < 0:
            labels = [0, 1, 3, 2]
        label_of = dict(zip(points, labels))
        pi_slots.append(edge_slot(label_of[(0, 0)], label_of[f]))

        for face_point in points:
            face = label_of[face_point]
            tri_points = [p for p in points if p != face_point]
            key, base = _normalise(tri_points)
            corner = {(p[0] - base[0], p[1] - base[1]): label_of[p] for p in tri_points}
            if face_point in ((0, 0), f):
                continue  # top faces are recorded below, after the bottom is glued
            if t == 0:
                bottom0[key] = (t, face, corner)
            else:
                _glue(gluings, (t, face, corner), top.pop(key))
        for face_point in ((0, 0), f):
            face = label_of[face_point]
            tri_points = [p for p in points if p != face_point]
            key, base = _normalise(tri_points)
            top[key] = (t, face, {(p[0] - base[0], p[1] - base[1]): label_of[p] for p in tri_points})
        a, b = (a, _add(a, b)) if letter == "R" else (_add(a, b), b)

    # close up: a triangle P of the starting triangulation is glued to M(P) on top
    (m00, m01), (m10, m11) = word.matrix()
    for key, (t, face, corner) in bottom0.items():
        image = {(m00 * p[0] + m01 * p[1], m10 * p[0] + m11 * p[1]): lab for p, lab in corner.items()}
        ikey, base = _normalise(image)
        shifted = {(p[0] - base[0], p[1] - base[1]): lab for p, lab in image.items()}
        _glue(gluings, (t, face, shifted), top.pop(ikey))
    assert not top

    tri = Triangulation(tuple(tuple(row) for row in gluings))
    assert tri.is_oriented()
    return tri, TautAngleStructure(tuple(pi_slots))


def _glue(gluings, lower, upper):
    """Glue a bottom face ``lower`` of one tetrahedron to a top face ``upper``."""
    (t, fl, cl), (u, fu, cu) = lower, upper
    perm = [None] * 4
    perm[fl] = fu
    for p, lab in cl.items():
        perm[lab] = cu[p]
    perm = tuple(perm)
    gluings[t][fl] = (u, perm)
    gluings[u][fu] = (t, inverse(perm))


def random_word(length: int, seed: int) -> MonodromyWord:
    """
    Uniform word over R, L from ``random.Random(seed)``, redrawn until both
    letters occur.
    """
    if length < 2:
        raise ValueError("a word needs length >= 2 to contain both letters")
    rng = random.Random(seed)
    while True:
        letters = "".join(rng.choice("RL") for _ in range(length))
        if "R" in letters and "L" in letters:
            return MonodromyWord(letters)

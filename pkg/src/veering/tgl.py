"""
Reading and writing gluing data.

TGL ("tetrahedron gluing list") is a small line-oriented format::

    % optional comment lines
    tets 2
    0 : 1 0132 1 1023 1 0213 1 3120
    1 : 0 0132 0 1023 0 0213 0 3120

The pairs after the colon give, for faces 0..3 of the tetrahedron, the target
tetrahedron and the vertex map written as ``d0 d1 d2 d3`` (vertex ``j`` goes to
``d_j``).  SnapPea triangulation files are also accepted as input.
"""
from __future__ import annotations

import re

from .triangulation import Perm, Triangulation, perm_to_str


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_PERM = re.compile(r"^[0-3]{4}$")


def _tokens(line: str):
    for m in re.finditer(r"\S+", line):
        yield m.group(), m.start() + 1


def _perm(tok: str, lineno: int, col: int) -> Perm:
    if not _PERM.match(tok) or len(set(tok)) != 4:
        raise ParseError(f"bad permutation {tok!r}", lineno, col)
    return tuple(int(ch) for ch in tok)


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(f"expected {what}, got {tok!r}", lineno, col)
    return int(tok)


def parse_triangulation(text: str) -> Triangulation:
    """Parse TGL text (or a SnapPea file, detected by its header)."""
    if text.lstrip().startswith("% Triangulation"):
        return parse_snappea(text)
    n = None
    rows: dict[int, tuple] = {}
    last = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("%"):
            continue
        last = lineno
        toks = list(_tokens(line))
        if n is None:
            if toks[0][0] != "tets" or len(toks) != 2:
                raise ParseError("expected header 'tets <n>'", lineno, toks[0][1])
            n = _int(toks[1][0], lineno, toks[1][1], "tetrahedron count")
            if n == 0:
                raise ParseError("tetrahedron count must be positive", lineno, toks[1][1])
            continue
        if len(toks) != 10 or toks[1][0] != ":":
            col = toks[min(len(toks), 10) - 1][1] if len(toks) < 10 else toks[-1][1]
            raise ParseError(
                f"expected '<t> : <n0> <p0> <n1> <p1> <n2> <p2> <n3> <p3>', got {len(toks)} fields",
                lineno, col)
        t = _int(toks[0][0], lineno, toks[0][1], "tetrahedron index")
        if t >= n:
            raise ParseError(f"tetrahedron index {t} out of range 0..{n - 1}", lineno, toks[0][1])
        if t in rows:
            raise ParseError(f"tetrahedron {t} listed twice", lineno, toks[0][1])
        faces = []
        for f in range(4):
            (ut, ucol), (pt, pcol) = toks[2 + 2 * f], toks[3 + 2 * f]
            u = _int(ut, lineno, ucol, "tetrahedron index")
            if u >= n:
                raise ParseError(f"tetrahedron index {u} out of range 0..{n - 1}", lineno, ucol)
            faces.append((u, _perm(pt, lineno, pcol)))
        rows[t] = tuple(faces)
    if n is None:
        raise ParseError("missing header 'tets <n>'", max(last, 1))
    missing = [t for t in range(n) if t not in rows]
    if missing:
        raise ParseError(f"unglued faces: no gluing line for tetrahedron {missing[0]}", last + 1)
    return Triangulation(tuple(rows[t] for t in range(n)))


def serialize(tri: Triangulation) -> str:
    lines = [f"tets {tri.tet_count}"]
    for t, row in enumerate(tri.gluings):
        pairs = " ".join(f"{u} {perm_to_str(p)}" for u, p in row)
        lines.append(f"{t} : {pairs}")
    return "\n".join(lines) + "\n"


def canonical(text: str) -> str:
    """Canonical TGL form: comments, blank lines and extra whitespace dropped."""
    return serialize(parse_triangulation(text))


def parse_snappea(text: str) -> Triangulation:
    """
    Read the gluing data from a SnapPea triangulation file.  Only the
    per-tetrahedron neighbour and permutation lines are used; peripheral
    curves and shapes are skipped.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    idx = 0
    # header: name, solution type, orientability, CS, cusp count line, cusps
    while idx < len(lines) and not re.match(r"^\d+\s+\d+$", lines[idx]):
        idx += 1
    if idx == len(lines):
        raise ParseError("no cusp count line in SnapPea file", idx)
    cusps = sum(int(x) for x in lines[idx].split())
    idx += 1
    seen = 0
    while seen < cusps:
        if lines[idx]:
            seen += 1
        idx += 1
    while not lines[idx]:
        idx += 1
    n = int(lines[idx])
    idx += 1
    rows = []
    for t in range(n):
        while not lines[idx]:
            idx += 1
        nbrs = [int(x) for x in lines[idx].split()]
        perms = lines[idx + 1].split()
        if len(nbrs) != 4 or len(perms) != 4:
            raise ParseError(f"malformed gluing block for tetrahedron {t}", idx + 1)
        rows.append(tuple((u, _perm(p, idx + 2, 1)) for u, p in zip(nbrs, perms)))
        # neighbours, permutations, cusp indices, 4 peripheral rows, then
        # an optional shape line
        idx += 7
        if idx < len(lines) and len(lines[idx].split()) == 2:
            idx += 1
    return Triangulation(tuple(rows))

"""
Command line front end.

    veer validate FILE
    veer report FILE [--json] [--structure I]
    veer census DIR [--json] [--jobs N]
    veer ptb WORD | --random N [--seed S] [--json]
    veer qmatrix FILE

FILE may be ``-`` for stdin.  Exit codes: 0 success, 1 the property sought
was not found, 2 bad input.  ``VEER_LOG`` sets the log level.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import pathlib
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .generators import MonodromyWord, layered_ptb, random_word
from .q_matching import build_q_system, vertical_only_solution
from .taut_veering import veering_report
from .tgl import parse_triangulation, serialize
from .triangulation import Triangulation, orient, vertex_links

log = logging.getLogger("veering")

EXIT_OK, EXIT_NOT_FOUND, EXIT_INPUT = 0, 1, 2


@dataclass
class StructureEntry:
    index: int
    taut_angle: list[str]
    veering: bool
    taut: bool
    strict: bool
    vertical_solution: bool
    colours: dict[str, str] | None
    one_sided_degrees: list[list[int]]
    flags: list[str] = field(default_factory=list)


@dataclass
class Report:
    manifold: str
    tet_count: int
    edge_degrees: list[int]
    strict: bool
    slack: str | None
    structures: list[StructureEntry]
    counts: dict[str, int]

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> Report:
        data = json.loads(text)
        data["structures"] = [StructureEntry(**s) for s in data["structures"]]
        return cls(**data)


def build_report(tri: Triangulation, label: str) -> Report:
    rep = veering_report(tri)
    entries = []
    for k, s in enumerate(rep.structures):
        entries.append(StructureEntry(
            index=k,
            taut_angle=s.taut_angle.labels(),
            veering=s.veering,
            taut=s.taut,
            strict=s.strict,
            vertical_solution=vertical_only_solution(tri, s.taut_angle) is not None,
            colours={f"e{e}": c for e, c in enumerate(s.colours)} if s.colours else None,
            one_sided_degrees=[list(d) for d in s.one_sided_degrees],
            flags=list(s.flags),
        ))
    return Report(
        manifold=label,
        tet_count=rep.tet_count,
        edge_degrees=rep.edge_degrees,
        strict=rep.strict,
        slack=str(rep.slack) if rep.slack is not None else None,
        structures=entries,
        counts=rep.counts,
    )


def _read(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "stdin"
    p = pathlib.Path(path)
    return p.read_text(), p.stem


def _load(path: str) -> tuple[Triangulation, str]:
    text, label = _read(path)
    return orient(parse_triangulation(text)), label


def _format_report(rep: Report) -> str:
    lines = [f"{rep.manifold}: {rep.tet_count} tetrahedra, edge degrees {rep.edge_degrees}",
             f"strict angle structure: {'yes, min angle ' + rep.slack + ' pi' if rep.strict else 'no'}"]
    for s in rep.structures:
        flags = [name for name in ("veering", "taut", "strict") if getattr(s, name)]
        lines.append(f"  [{s.index}] {' | '.join(s.taut_angle)}  {' '.join(flags) or '-'}")
        if s.colours:
            lines.append("      colours " + "".join(s.colours[f"e{e}"] for e in range(len(s.colours))))
        for flag in s.flags:
            lines.append(f"      note: {flag}")
    c = rep.counts
    lines.append(f"taut angle structures {c['taut_angle_structures']}, taut {c['taut']}, "
                 f"veering {c['veering']}, taut and veering {c['taut_and_veering']}")
    return "\n".join(lines)


def cmd_validate(args) -> int:
    try:
        tri, label = _load(args.file)
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    print(f"{label}: {tri.tet_count} tetrahedra, {len(tri.edges)} edges, "
          f"degrees {[e.degree for e in tri.edges]}")
    if tri.flipped:
        print(f"relabelled tetrahedra {list(tri.flipped)} for a coherent orientation")
    for k, (corners, chi) in enumerate(vertex_links(tri)):
        if chi != 0:
            log.warning("vertex %d has a link of Euler characteristic %d, not a torus", k, chi)
            print(f"warning: vertex {k} link has Euler characteristic {chi}")
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        tri, label = _load(args.file)
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    rep = build_report(tri, label)
    if args.structure is not None:
        if not 0 <= args.structure < len(rep.structures):
            print(f"error: structure index {args.structure} out of range "
                  f"({len(rep.structures)} structures)", file=sys.stderr)
            return EXIT_INPUT
        rep.structures = [rep.structures[args.structure]]
    print(rep.to_json() if args.json else _format_report(rep))
    return EXIT_OK if rep.strict else EXIT_NOT_FOUND


def _census_one(path: str) -> tuple[str, dict[str, int] | None, str | None]:
    try:
        tri = orient(parse_triangulation(pathlib.Path(path).read_text()))
    except (OSError, ValueError) as err:
        return path, None, str(err)
    return path, veering_report(tri).counts, None


def census_totals(paths, jobs: int = 1) -> dict[str, int]:
    totals = dict.fromkeys(("triangulations", "taut_angle_structures", "with_taut",
                            "with_veering", "taut_and_veering", "errors"), 0)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_census_one, paths, chunksize=32))
    else:
        results = map(_census_one, paths)
    for path, counts, err in results:
        if counts is None:
            log.error("%s: %s", path, err)
            totals["errors"] += 1
            continue
        totals["triangulations"] += 1
        totals["taut_angle_structures"] += counts["taut_angle_structures"]
        totals["with_taut"] += counts["taut"]
        totals["with_veering"] += counts["veering"]
        totals["taut_and_veering"] += counts["taut_and_veering"]
    return totals


def cmd_census(args) -> int:
    root = pathlib.Path(args.dir)
    if not root.is_dir():
        print(f"error: {root} is not a directory", file=sys.stderr)
        return EXIT_INPUT
    paths = sorted(str(p) for p in root.glob("*.tgl"))
    totals = census_totals(paths, args.jobs)
    if args.json:
        print(json.dumps(totals, sort_keys=True, indent=2))
    else:
        for key, val in totals.items():
            print(f"{key:>22} {val}")
    return EXIT_OK


def cmd_ptb(args) -> int:
    try:
        if args.random is not None:
            word = random_word(args.random, args.seed)
        elif args.word:
            word = MonodromyWord(args.word)
        else:
            print("error: give a word or --random LENGTH", file=sys.stderr)
            return EXIT_INPUT
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    tri, taut = layered_ptb(word)
    rep = build_report(tri, f"ptb_{word}")
    chosen = next(s for s in rep.structures if s.taut_angle == taut.labels())
    ok = chosen.veering and rep.strict and not chosen.vertical_solution
    if args.json:
        print(json.dumps({"word": str(word), "tgl": serialize(tri),
                          "layered_structure": chosen.index,
                          "report": json.loads(rep.to_json())}, sort_keys=True, indent=2))
    else:
        sys.stdout.write(f"% layered punctured torus bundle, monodromy {word}\n" + serialize(tri))
        print(f"% layered structure {' | '.join(taut.labels())}: veering={chosen.veering} "
              f"taut={chosen.taut} strict={rep.strict} "
              f"vertical_solution={chosen.vertical_solution}")
    return EXIT_OK if ok else EXIT_NOT_FOUND


def cmd_qmatrix(args) -> int:
    try:
        tri, _ = _load(args.file)
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(build_q_system(tri).to_text())
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="veer", description="Taut, veering and strict angle structures.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse, orient and check vertex links")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("report", help="taut angle structures with veering/taut/strict verdicts")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--structure", type=int, help="only report the structure with this index")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("census", help="aggregate counts over a directory of .tgl files")
    p.add_argument("dir")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("ptb", help="layered once-punctured torus bundle from an R/L word")
    p.add_argument("word", nargs="?")
    p.add_argument("--random", type=int, metavar="LENGTH", help="use a random word of this length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ptb)

    p = sub.add_parser("qmatrix", help="print the Q-matching matrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_qmatrix)
    return ap


def main(argv=None) -> int:
    level = os.environ.get("VEER_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

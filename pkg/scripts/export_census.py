#!/usr/bin/env python3
"""
Dump SnapPea census triangulations to TGL files, one per manifold.

Needs SnapPy (``pip install snappy``), which ships the census.  The
triangulations are written exactly as stored in the census, vertex labels
included, since taut angle structures are quoted in those labels.

    python scripts/export_census.py --out data/census            # all, <= 7 tets
    python scripts/export_census.py --out tests/data s227 m004   # selected
"""
import argparse
import pathlib
import sys
import warnings

from veering.tgl import parse_snappea, serialize


def export(manifold, out: pathlib.Path) -> pathlib.Path:
    tri = parse_snappea(manifold._to_string())
    path = out / f"{manifold.name()}.tgl"
    path.write_text(f"% {manifold.name()} (SnapPea census)\n" + serialize(tri))
    return path


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--out", type=pathlib.Path, required=True)
    ap.add_argument("--max-tets", type=int, default=7)
    ap.add_argument("names", nargs="*", help="census names; default is the whole orientable census")
    args = ap.parse_args(argv)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        import snappy

    args.out.mkdir(parents=True, exist_ok=True)
    if args.names:
        manifolds = [snappy.Manifold(name) for name in args.names]
    else:
        manifolds = [M for k in range(1, args.max_tets + 1)
                     for M in snappy.OrientableCuspedCensus(tets=k)]
    for M in manifolds:
        export(M, args.out)
    print(f"wrote {len(manifolds)} triangulations to {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()

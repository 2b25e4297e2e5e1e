"""Command-line interface.

Subcommands: family (write a built-in quarter-arc file), count (the three
projection counts, optionally with SVG panels), verify-table (twist-family
closed forms), search (random sampling into a catalog), identify
(fingerprint and candidates, with Gauss-code export), chords (simultaneous
chord-diagram SVG), query (filter a catalog).

Counts are printed as "p_X p_Y p_Z sum".  Exit codes: 0 success,
1 verification mismatch, 2 usage, 3 parse error, 4 invalid embedding,
5 general-position violation.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .chords import simultaneous_chords
from .diagram import (
    GeneralPositionViolation,
    InvalidEmbeddingError,
    project_and_count,
    triple_count,
)
from .families import (
    TwistSpec,
    builtin_quarter,
    twist_quarter_case,
    twist_quarter_unified,
    verify_twist_table,
)
from .geometry import Axis, parse_coordinate
from .invariants import fingerprint, identify
from .polygon import (
    KnotEmbedding,
    QuarterFileError,
    load_quarter,
    save_quarter,
    symmetrize,
    validate_embedding,
)
from .search import CatalogWriter, SearchAborted, SearchConfig, read_catalog, run_search
from .svg import RenderSpec, chords_svg, diagram_svg

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_GENERAL_POSITION = 5


def _fail(code: int, kind: str, message: str) -> int:
    print(f"error: {kind}: {message}", file=sys.stderr)
    return code


def _load_embedding(path: str) -> KnotEmbedding:
    quarter = load_quarter(path)
    embedding = symmetrize(quarter)
    report = validate_embedding(embedding)
    if not report.valid:
        raise InvalidEmbeddingError(report)
    return embedding


def _delta(text: str) -> Fraction:
    try:
        return parse_coordinate(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _cmd_family(args) -> int:
    kind = args.kind
    try:
        if kind in ("case1", "case2", "case3", "case4"):
            if args.m is None:
                raise ValueError("--m is required for the case generators")
            quarter = twist_quarter_case(int(kind[-1]), args.m, args.delta)
        elif kind == "unified":
            if args.k is None:
                raise ValueError("--k is required for the unified generator")
            quarter = twist_quarter_unified(TwistSpec(args.k, args.rho, args.delta))
        else:
            quarter = builtin_quarter(kind, args.delta)
    except ValueError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    save_quarter(quarter, args.out)
    print(f"wrote {args.out} ({quarter.name}, {len(quarter.vertices)} vertices)")
    return EXIT_OK


def _cmd_count(args) -> int:
    try:
        embedding = _load_embedding(args.file)
        counts = triple_count(embedding)
    except (OSError, QuarterFileError) as exc:
        return _fail(EXIT_PARSE, "parse", str(exc))
    except InvalidEmbeddingError as exc:
        return _fail(EXIT_INVALID, "invalid-embedding", str(exc))
    except GeneralPositionViolation as exc:
        return _fail(EXIT_GENERAL_POSITION, "general-position", str(exc))
    print(f"{counts.p_x} {counts.p_y} {counts.p_z} {counts.total}")
    if args.svg:
        out = Path(args.svg)
        out.mkdir(parents=True, exist_ok=True)
        spec = RenderSpec()
        for axis in (Axis.X, Axis.Y, Axis.Z):
            path = out / f"projection_{axis.value.lower()}.svg"
            path.write_text(diagram_svg(embedding, axis, spec))
        (out / "chords.svg").write_text(chords_svg(simultaneous_chords(embedding), spec))
        print(f"wrote panels to {out}")
    return EXIT_OK


def _cmd_verify_table(args) -> int:
    report = verify_twist_table(args.max_k)
    for row in report.rows:
        status = "PASS"
        prefix = f"C({2 * row.k},{2 * row.rho})"
        print(
            f"{status} {prefix}: n={row.n} p_x={row.counts.p_x} p_y={row.counts.p_y} "
            f"p_z={row.counts.p_z} sum={row.counts.total}"
        )
    for problem in report.mismatches:
        print(f"FAIL {problem}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        seed=args.seed,
        samples=args.samples,
        min_interior=args.min_verts,
        max_interior=args.max_verts,
        coord_bound=args.coord_bound,
        delta=args.delta,
    )
    try:
        with CatalogWriter(args.catalog) as sink:
            stats = run_search(cfg, sink, workers=args.workers)
    except SearchAborted as exc:
        for line in exc.stats.summary_lines():
            print(line)
        return _fail(EXIT_PARSE, "catalog-write", str(exc.cause))
    for line in stats.summary_lines():
        print(line)
    return EXIT_OK


def _cmd_identify(args) -> int:
    try:
        embedding = _load_embedding(args.file)
        diagrams = {axis: project_and_count(embedding, axis) for axis in Axis}
    except (OSError, QuarterFileError) as exc:
        return _fail(EXIT_PARSE, "parse", str(exc))
    except InvalidEmbeddingError as exc:
        return _fail(EXIT_INVALID, "invalid-embedding", str(exc))
    except GeneralPositionViolation as exc:
        return _fail(EXIT_GENERAL_POSITION, "general-position", str(exc))
    smallest = min(diagrams.values(), key=lambda d: d.crossing_count)
    fp = fingerprint(list(smallest.pd_code))
    names = identify(fp)
    print(f"determinant {fp.determinant}")
    print(f"alexander {','.join(str(c) for c in fp.alexander.coeffs_lowest_first())}")
    print(f"candidates {' '.join(names) if names else '-'} (up to mirror image)")
    if args.gauss:
        for axis in (Axis.X, Axis.Y, Axis.Z):
            code = " ".join(diagrams[axis].gauss_code) or "-"
            print(f"gauss {axis.value} {code}")
    return EXIT_OK


def _cmd_chords(args) -> int:
    try:
        embedding = _load_embedding(args.file)
        cd = simultaneous_chords(embedding)
    except (OSError, QuarterFileError) as exc:
        return _fail(EXIT_PARSE, "parse", str(exc))
    except InvalidEmbeddingError as exc:
        return _fail(EXIT_INVALID, "invalid-embedding", str(exc))
    except GeneralPositionViolation as exc:
        return _fail(EXIT_GENERAL_POSITION, "general-position", str(exc))
    out = Path(args.svg)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(chords_svg(cd))
    print(f"wrote {out} ({len(cd.chords)} chords)")
    return EXIT_OK


def _cmd_query(args) -> int:
    try:
        entries = read_catalog(args.catalog)
    except (OSError, ValueError) as exc:
        return _fail(EXIT_PARSE, "parse", str(exc))
    for entry in entries:
        if args.name is not None and args.name not in entry.names:
            continue
        if args.max_sum is not None and entry.total > args.max_sum:
            continue
        if args.unidentified and entry.names:
            continue
        print(entry.to_line())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simknot",
        description=(
            "Doubly symmetric polygonal knots: construction, exact projection "
            "counts (printed as 'p_X p_Y p_Z sum'), invariants and search."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="write a built-in quarter-arc file")
    p.add_argument(
        "kind",
        choices=["case1", "case2", "case3", "case4", "unified", "unknot", "T45"],
    )
    p.add_argument("--m", type=int, default=None, help="case-generator parameter")
    p.add_argument("--k", type=int, default=None, help="unified-generator parameter")
    p.add_argument("--rho", type=int, choices=(1, -1), default=1)
    p.add_argument("--delta", type=_delta, default=Fraction(1, 5))
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("count", help="three projection crossing counts")
    p.add_argument("file")
    p.add_argument("--svg", default=None, help="directory for SVG panels")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify-table", help="check the twist-family closed forms")
    p.add_argument("--max-k", type=int, default=3)
    p.set_defaults(func=_cmd_verify_table)

    p = sub.add_parser("search", help="random quarter-arc search into a catalog")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--catalog", required=True)
    p.add_argument("--min-verts", type=int, default=1)
    p.add_argument("--max-verts", type=int, default=4)
    p.add_argument("--coord-bound", type=int, default=3)
    p.add_argument("--delta", type=_delta, default=Fraction(1, 5))
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("identify", help="fingerprint a quarter-arc file")
    p.add_argument("file")
    p.add_argument("--gauss", action="store_true", help="print Gauss codes for export")
    p.set_defaults(func=_cmd_identify)

    p = sub.add_parser("chords", help="simultaneous chord-diagram SVG")
    p.add_argument("file")
    p.add_argument("--svg", required=True, help="output SVG path")
    p.set_defaults(func=_cmd_chords)

    p = sub.add_parser("query", help="filter a search catalog")
    p.add_argument("--catalog", required=True)
    p.add_argument("--name", default=None)
    p.add_argument("--max-sum", type=int, default=None)
    p.add_argument("--unidentified", action="store_true")
    p.set_defaults(func=_cmd_query)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

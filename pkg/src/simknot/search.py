"""Random search for low-crossing-sum symmetric embeddings.

Quarter arcs are sampled on the fifth-integer lattice with integer axis
endpoints, symmetrized, validated, counted and fingerprinted; accepted
embeddings are appended to a line-oriented catalog.  Each sample index
gets an independent substream derived from (seed, index) by hashing, so a
run is bit-reproducible for any worker count and execution order.
"""

from __future__ import annotations

import hashlib
import random
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import GeneralPositionViolation, parity_check, project_and_count
from .families import sim_lower_bound
from .geometry import Axis, Point3, format_coordinate, parse_coordinate
from .invariants import Fingerprint, LaurentPoly, fingerprint, identify, name_crossing_number
from .polygon import (
    KnotEmbedding,
    QuarterArc,
    quarter_violations,
    symmetrize,
    validate_embedding,
)

LATTICE_DENOMINATOR = 5


class SearchAborted(RuntimeError):
    def __init__(self, stats, cause):
        self.stats = stats
        self.cause = cause
        super().__init__(f"search aborted after {stats.attempted} samples: {cause}")


class CountingBugError(AssertionError):
    """A structural invariant failed on an accepted embedding (a counting bug)."""


@dataclass(frozen=True)
class SearchConfig:
    seed: int
    samples: int
    min_interior: int = 1
    max_interior: int = 4
    coord_bound: int = 3
    delta: Fraction = Fraction(1, 5)

    def __post_init__(self):
        if self.samples < 0:
            raise ValueError("samples must be non-negative")
        if self.min_interior < 1:
            raise ValueError("min_interior must be at least 1")
        if self.max_interior < self.min_interior:
            raise ValueError("max_interior must be >= min_interior")
        if self.coord_bound < 2:
            raise ValueError("coord_bound must be at least 2")


@dataclass(frozen=True)
class CatalogEntry:
    index: int
    seed: int
    vertices: tuple[tuple[str, str, str], ...]
    p_x: int
    p_y: int
    p_z: int
    total: int
    determinant: int
    alexander: tuple[int, ...]
    names: tuple[str, ...]

    def to_line(self) -> str:
        verts = ";".join(",".join(v) for v in self.vertices)
        alex = ",".join(str(c) for c in self.alexander)
        names = "|".join(self.names) if self.names else "-"
        return (
            f"{self.index}\t{self.seed}\t{verts}\t{self.p_x}\t{self.p_y}\t{self.p_z}"
            f"\t{self.total}\t{self.determinant}\t{alex}\t{names}"
        )

    @staticmethod
    def from_line(line: str) -> "CatalogEntry":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 10:
            raise ValueError(f"catalog line has {len(parts)} fields, expected 10")
        verts = tuple(tuple(v.split(",")) for v in parts[2].split(";"))
        names = tuple(parts[9].split("|")) if parts[9] != "-" else ()
        return CatalogEntry(
            index=int(parts[0]),
            seed=int(parts[1]),
            vertices=verts,
            p_x=int(parts[3]),
            p_y=int(parts[4]),
            p_z=int(parts[5]),
            total=int(parts[6]),
            determinant=int(parts[7]),
            alexander=tuple(int(c) for c in parts[8].split(",")),
            names=names,
        )

    def quarter(self) -> QuarterArc:
        pts = tuple(
            Point3(*(parse_coordinate(c) for c in triple)) for triple in self.vertices
        )
        return QuarterArc(name=f"catalog-{self.index}", vertices=pts)


@dataclass
class SearchStats:
    attempted: int = 0
    rejected_quarter: int = 0
    invalid_embedding: int = 0
    general_position: int = 0
    accepted: int = 0
    identified: int = 0
    best_sums: dict = field(default_factory=dict)

    def summary_lines(self) -> list[str]:
        lines = [
            f"attempted {self.attempted}",
            f"rejected-quarter {self.rejected_quarter}",
            f"invalid-embedding {self.invalid_embedding}",
            f"general-position-failures {self.general_position}",
            f"accepted {self.accepted}",
            f"identified {self.identified}",
        ]
        for name in sorted(self.best_sums):
            lines.append(f"best {name} {self.best_sums[name]}")
        return lines


def _rng_for(seed: int, index: int) -> random.Random:
    payload = b"simknot-search" + struct.pack(
        "<QQ", seed & 0xFFFFFFFFFFFFFFFF, index & 0xFFFFFFFFFFFFFFFF
    )
    digest = hashlib.sha256(payload).digest()
    return random.Random(int.from_bytes(digest, "little"))


def sample_quarter(stream: random.Random, cfg: SearchConfig) -> QuarterArc | None:
    """Draw one candidate quarter arc; None when the invariants reject it.

    Draw order (fixed for reproducibility): x-endpoint magnitude, sign;
    y-endpoint magnitude, sign; interior count; then per interior vertex
    the three lattice numerators.
    """
    bound = cfg.coord_bound
    a = stream.randint(1, bound) * stream.choice((-1, 1))
    b = stream.randint(1, bound) * stream.choice((-1, 1))
    count = stream.randint(cfg.min_interior, cfg.max_interior)
    scale = LATTICE_DENOMINATOR
    pts = [Point3.of(a, 0, 0)]
    for _ in range(count):
        coords = [
            Fraction(stream.randint(-scale * bound, scale * bound), scale)
            for _ in range(3)
        ]
        pts.append(Point3(*coords))
    pts.append(Point3.of(0, b, 0))
    if quarter_violations(pts):
        return None
    return QuarterArc(name="random", vertices=tuple(pts), delta=cfg.delta)


def _process_index(args) -> tuple[int, str, CatalogEntry | None]:
    seed, cfg, index = args
    stream = _rng_for(seed, index)
    quarter = sample_quarter(stream, cfg)
    if quarter is None:
        return (index, "rejected_quarter", None)
    embedding = symmetrize(quarter)
    if not validate_embedding(embedding).valid:
        return (index, "invalid_embedding", None)
    try:
        diagrams = {axis: project_and_count(embedding, axis) for axis in Axis}
    except GeneralPositionViolation:
        return (index, "general_position", None)
    for axis, diagram in diagrams.items():
        if not parity_check(diagram):
            raise CountingBugError(
                f"parity violation along {axis.value} at sample {index}"
            )
    counts = {axis: d.crossing_count for axis, d in diagrams.items()}
    total = sum(counts.values())
    smallest = min(diagrams.values(), key=lambda d: d.crossing_count)
    fp = fingerprint(list(smallest.pd_code))
    names = tuple(identify(fp))
    for name in names:
        cr = name_crossing_number(name)
        if cr is not None and total < sim_lower_bound(cr):
            raise CountingBugError(
                f"sum {total} below the parity bound for {name} at sample {index}"
            )
    entry = CatalogEntry(
        index=index,
        seed=seed,
        vertices=tuple(
            tuple(format_coordinate(c) for c in p) for p in quarter.vertices
        ),
        p_x=counts[Axis.X],
        p_y=counts[Axis.Y],
        p_z=counts[Axis.Z],
        total=total,
        determinant=fp.determinant,
        alexander=fp.alexander.coeffs_lowest_first(),
        names=names,
    )
    return (index, "accepted", entry)


def run_search(cfg: SearchConfig, sink, workers: int = 1) -> SearchStats:
    """Sample cfg.samples quarters and append accepted entries to the sink.

    The sink needs only an ``append(entry)`` method (a list works; see
    CatalogWriter for the file format).  Entries are appended in sample
    order whatever the worker count; the catalog bytes depend only on
    (seed, cfg).
    """
    stats = SearchStats()
    args = [(cfg.seed, cfg, i) for i in range(cfg.samples)]
    if workers <= 1:
        results = map(_process_index, args)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_process_index, args, chunksize=64)
    try:
        for index, status, entry in results:
            stats.attempted += 1
            if status != "accepted":
                setattr(stats, status, getattr(stats, status) + 1)
                continue
            stats.accepted += 1
            if entry.names:
                stats.identified += 1
                for name in entry.names:
                    prev = stats.best_sums.get(name)
                    if prev is None or entry.total < prev:
                        stats.best_sums[name] = entry.total
            try:
                sink.append(entry)
            except OSError as exc:
                raise SearchAborted(stats, exc) from exc
    finally:
        if workers > 1:
            pool.shutdown()
    return stats


class CatalogWriter:
    """Append-only line-per-entry catalog file."""

    def __init__(self, path):
        self.path = path
        self._fh = open(path, "w", encoding="utf-8")

    def append(self, entry: CatalogEntry) -> None:
        self._fh.write(entry.to_line() + "\n")
        self._fh.flush()

    def close(self) -> None:
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def read_catalog(path) -> list[CatalogEntry]:
    entries = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                entries.append(CatalogEntry.from_line(line))
    return entries


def revalidate_counts(entry: CatalogEntry) -> bool:
    """Parse the stored quarter, rebuild and recount; compare the counts."""
    embedding = symmetrize(entry.quarter())
    if not validate_embedding(embedding).valid:
        return False
    try:
        counts = {axis: project_and_count(embedding, axis).crossing_count for axis in Axis}
    except GeneralPositionViolation:
        return False
    return (
        counts[Axis.X] == entry.p_x
        and counts[Axis.Y] == entry.p_y
        and counts[Axis.Z] == entry.p_z
    )


def revalidate_entry(entry: CatalogEntry) -> bool:
    """Recompute everything from the stored quarter and compare."""
    embedding = symmetrize(entry.quarter())
    if not validate_embedding(embedding).valid:
        return False
    try:
        diagrams = {axis: project_and_count(embedding, axis) for axis in Axis}
    except GeneralPositionViolation:
        return False
    if (
        diagrams[Axis.X].crossing_count != entry.p_x
        or diagrams[Axis.Y].crossing_count != entry.p_y
        or diagrams[Axis.Z].crossing_count != entry.p_z
    ):
        return False
    smallest = min(diagrams.values(), key=lambda d: d.crossing_count)
    fp = fingerprint(list(smallest.pd_code))
    want = Fingerprint(entry.determinant, LaurentPoly.from_coeffs(entry.alexander))
    return fp.key() == want.key() and tuple(identify(fp)) == entry.names

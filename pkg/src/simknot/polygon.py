"""Symmetric polygon construction and validation.

A quarter arc is one fundamental domain of a closed polygon that is
setwise invariant under the half-turns about the x- and y-axes (and hence
about the z-axis).  ``symmetrize`` glues the four half-turn images of a
quarter into the closed polygon; ``validate_embedding`` checks the
symmetry, axis-intersection and embeddedness conditions exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .geometry import (
    Axis,
    Point3,
    edges_fold_back,
    format_coordinate,
    half_turn,
    parse_coordinate,
    segments_intersect_3d,
    sub3,
)

DEFAULT_DELTA = Fraction(1, 5)


class QuarterArcError(ValueError):
    """A vertex list violates the quarter-arc invariants."""


def _on_axis(p: Point3) -> Axis | None:
    """Axis containing p, or None. The origin reports as Axis.X arbitrarily."""
    zero = (p.x == 0, p.y == 0, p.z == 0)
    if zero == (False, True, True):
        return Axis.X
    if zero == (True, False, True):
        return Axis.Y
    if zero == (True, True, False):
        return Axis.Z
    if zero == (True, True, True):
        return Axis.X
    return None


def quarter_violations(vertices) -> list[str]:
    """Return the quarter-arc invariant violations for a vertex list."""
    problems = []
    if len(vertices) < 2:
        return ["quarter needs at least two vertices"]
    first, last = vertices[0], vertices[-1]
    if first == Point3.of(0, 0, 0) or last == Point3.of(0, 0, 0):
        problems.append("endpoint at the origin")
    a = _on_axis(first)
    b = _on_axis(last)
    if a not in (Axis.X, Axis.Y):
        problems.append("first vertex must lie on the x- or y-axis")
    if b not in (Axis.X, Axis.Y):
        problems.append("last vertex must lie on the x- or y-axis")
    if a in (Axis.X, Axis.Y) and a == b:
        problems.append("endpoints must lie on distinct horizontal axes")
    for i, p in enumerate(vertices[1:-1], start=1):
        if _on_axis(p) is not None:
            problems.append(f"interior vertex {i} lies on a coordinate axis")
    return problems


@dataclass(frozen=True)
class QuarterArc:
    """An open polyline from one horizontal axis to the other."""

    name: str
    vertices: tuple[Point3, ...]
    delta: Fraction = DEFAULT_DELTA

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        problems = quarter_violations(self.vertices)
        if problems:
            raise QuarterArcError("; ".join(problems))

    @property
    def start_axis(self) -> Axis:
        return _on_axis(self.vertices[0])

    @property
    def end_axis(self) -> Axis:
        return _on_axis(self.vertices[-1])


@dataclass(frozen=True)
class KnotEmbedding:
    """A closed symmetric polygon (cyclic vertex list)."""

    vertices: tuple[Point3, ...]
    source: QuarterArc | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self):
        return len(self.vertices)

    def coordinate_scale(self) -> int:
        """LCM of all coordinate denominators (for exact integer work)."""
        denoms = [c.denominator for p in self.vertices for c in p]
        return lcm(*denoms) if denoms else 1

    def integer_vertices(self) -> tuple[list[tuple[int, int, int]], int]:
        """Vertices scaled to integers, plus the scale used."""
        s = self.coordinate_scale()
        ints = [
            (
                int(p.x * s),
                int(p.y * s),
                int(p.z * s),
            )
            for p in self.vertices
        ]
        return ints, s


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, str], ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {code for code, _ in self.violations}


def symmetrize(quarter: QuarterArc) -> KnotEmbedding:
    """Close a quarter arc into the full symmetric polygon.

    With Q running from A on axis a to B on axis b, the polygon traverses
    Q, then the b-half-turn image of Q reversed, then the z-half-turn
    image, then the a-half-turn image reversed, dropping the glued
    duplicate vertices.  A quarter of q vertices yields 4q - 4 vertices.
    """
    verts = quarter.vertices
    a, b = quarter.start_axis, quarter.end_axis
    leg1 = list(verts)
    leg2 = [half_turn(b, p) for p in verts[-2::-1]]
    leg3 = [half_turn(Axis.Z, p) for p in verts[1:]]
    leg4 = [half_turn(a, p) for p in verts[-2:0:-1]]
    return KnotEmbedding(tuple(leg1 + leg2 + leg3 + leg4), source=quarter)


def _axis_hits(ints, axis: Axis) -> set | None:
    """Distinct points where the closed polygon meets a coordinate axis.

    Returns None if some edge lies inside the axis (infinitely many points).
    Points are reported as parameter-free exact tuples in scaled coordinates.
    """
    # indices of the two coordinates that must vanish on the axis
    others = {Axis.X: (1, 2), Axis.Y: (0, 2), Axis.Z: (0, 1)}[axis]
    n = len(ints)
    hits = set()
    for i in range(n):
        p = ints[i]
        q = ints[(i + 1) % n]
        d = sub3(q, p)
        # solve p + t*d == 0 in both vanishing coordinates, t in [0, 1]
        ts = None  # None means "all t so far"
        degenerate = False
        for k in others:
            if d[k] == 0:
                if p[k] != 0:
                    degenerate = True
                    ts = []
                    break
                continue  # coordinate vanishes identically
            t = Fraction(-p[k], d[k])
            if ts is None:
                ts = [t]
            elif t not in ts:
                ts = []
                degenerate = True
                break
        if degenerate:
            continue
        if ts is None:
            return None  # whole edge lies on the axis
        t = ts[0]
        if 0 <= t <= 1:
            hits.add((p[0] + t * d[0], p[1] + t * d[1], p[2] + t * d[2]))
    return hits


def _symmetry_permutation(ints, image) -> list[int] | None:
    index = {}
    for i, p in enumerate(ints):
        if p in index:
            return None  # repeated vertex; reported elsewhere
        index[p] = i
    perm = []
    for p in image:
        j = index.get(p)
        if j is None:
            return None
        perm.append(j)
    return perm


def _is_reflection(perm) -> bool:
    n = len(perm)
    s = perm[0]
    return all(perm[i] == (s - i) % n for i in range(n))


def validate_embedding(embedding: KnotEmbedding) -> ValidationReport:
    """Check symmetry, axis counts, embeddedness and edge lengths.

    Findings (never exceptions) are returned in the report:
    ``zero_length_edge``, ``symmetry``, ``axis_count``, ``self_intersection``.
    """
    cached = embedding._cache.get("report")
    if cached is not None:
        return cached

    findings: list[tuple[str, str]] = []
    ints, _scale = embedding.integer_vertices()
    n = len(ints)

    if n < 3:
        findings.append(("self_intersection", "fewer than three vertices"))

    for i in range(n):
        if ints[i] == ints[(i + 1) % n]:
            findings.append(("zero_length_edge", f"edge {i} has zero length"))

    # half-turn symmetry of the curve: the vertex cycle must map to itself
    # orientation-reversed under the x- and y-half-turns
    def turn(p, axis):
        if axis is Axis.X:
            return (p[0], -p[1], -p[2])
        if axis is Axis.Y:
            return (-p[0], p[1], -p[2])
        return (-p[0], -p[1], p[2])

    if not any(code == "zero_length_edge" for code, _ in findings):
        # strong inversions traverse the polygon backwards: reflection form
        for axis in (Axis.X, Axis.Y):
            perm = _symmetry_permutation(ints, [turn(p, axis) for p in ints])
            if perm is None or not _is_reflection(perm):
                findings.append(
                    ("symmetry", f"polygon not invariant under the {axis.value}-axis half-turn")
                )

    # axis intersection counts: 2, 2, 0
    for axis, expect in ((Axis.X, 2), (Axis.Y, 2), (Axis.Z, 0)):
        hits = _axis_hits(ints, axis)
        if hits is None:
            findings.append(("axis_count", f"an edge lies along the {axis.value}-axis"))
        elif len(hits) != expect:
            findings.append(
                (
                    "axis_count",
                    f"polygon meets the {axis.value}-axis in {len(hits)} points, expected {expect}",
                )
            )

    # exact 3D embeddedness
    for i in range(n):
        p, q = ints[i], ints[(i + 1) % n]
        if p == q:
            continue
        for j in range(i + 1, n):
            r, s = ints[j], ints[(j + 1) % n]
            if r == s:
                continue
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent pairs handled below
            if segments_intersect_3d(p, q, r, s):
                findings.append(
                    ("self_intersection", f"edges {i} and {j} intersect")
                )
    for i in range(n):
        u, v, w = ints[(i - 1) % n], ints[i], ints[(i + 1) % n]
        if u != v != w and edges_fold_back(u, v, w):
            findings.append(
                ("self_intersection", f"edges at vertex {i} overlap beyond the vertex")
            )

    report = ValidationReport(tuple(findings))
    embedding._cache["report"] = report
    return report


# --------------------------------------------------------------------------
# quarter-arc interchange files (JSON with exact coordinate strings)
# --------------------------------------------------------------------------


class QuarterFileError(ValueError):
    """The file does not parse as a quarter-arc document."""


def quarter_to_document(quarter: QuarterArc) -> dict:
    return {
        "name": quarter.name,
        "delta": format_coordinate(quarter.delta),
        "vertices": [
            [format_coordinate(c) for c in p] for p in quarter.vertices
        ],
    }


def quarter_from_document(doc: dict) -> QuarterArc:
    try:
        name = doc["name"]
        vertices = doc["vertices"]
    except (TypeError, KeyError) as exc:
        raise QuarterFileError(f"missing field: {exc}") from exc
    if not isinstance(name, str):
        raise QuarterFileError("name must be a string")
    delta_text = doc.get("delta", format_coordinate(DEFAULT_DELTA))
    try:
        delta = parse_coordinate(delta_text)
        points = []
        for triple in vertices:
            if len(triple) != 3:
                raise ValueError("vertex needs exactly three coordinates")
            points.append(Point3(*(parse_coordinate(c) for c in triple)))
    except ValueError as exc:
        raise QuarterFileError(str(exc)) from exc
    try:
        return QuarterArc(name=name, vertices=tuple(points), delta=delta)
    except QuarterArcError as exc:
        raise QuarterFileError(str(exc)) from exc


def dumps_quarter(quarter: QuarterArc) -> str:
    """Canonical file text: fixed key order, one vertex per line.

    Writers elsewhere (editor plug-ins) reproduce this layout byte for
    byte, so unedited round trips are exact.
    """
    doc = quarter_to_document(quarter)
    rows = ",\n".join(
        "    [" + ", ".join(json.dumps(c) for c in triple) + "]"
        for triple in doc["vertices"]
    )
    return (
        "{\n"
        f'  "name": {json.dumps(doc["name"])},\n'
        f'  "delta": {json.dumps(doc["delta"])},\n'
        '  "vertices": [\n'
        f"{rows}\n"
        "  ]\n"
        "}\n"
    )


def loads_quarter(text: str) -> QuarterArc:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuarterFileError(f"not valid JSON: {exc}") from exc
    return quarter_from_document(doc)


def save_quarter(quarter: QuarterArc, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_quarter(quarter))


def load_quarter(path) -> QuarterArc:
    with open(path, encoding="utf-8") as fh:
        return loads_quarter(fh.read())

"""Axis projections of a validated embedding: crossings, codes, parity.

Projecting a closed symmetric polygon along a coordinate axis yields a
knot diagram.  Crossings are found by exact pairwise classification of
the projected strands.  Consecutive projected edges that continue along
one line are merged into a single straight passage first, so glued
straight vertices do not create spurious incidences.  The only sanctioned
vertex collision is the central crossing at the projection-plane origin
of the two intravergent projections; every other degeneracy raises
``GeneralPositionViolation``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .geometry import (
    Axis,
    CollinearOverlap,
    Disjoint,
    EndpointIncidence,
    GeometryError,
    TransverseInterior,
    ccw_strictly_between,
    classify_intersection,
    cross2,
    dot2,
    project_triple,
    rays_alternate,
    sub2,
)
from .polygon import KnotEmbedding, validate_embedding


class InvalidEmbeddingError(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(
            "embedding is not valid: " + "; ".join(msg for _, msg in report.violations)
        )


class GeneralPositionViolation(ValueError):
    """The projection is not a regular diagram (with locus information)."""

    def __init__(self, axis: Axis, reason: str, where=None):
        self.axis = axis
        self.reason = reason
        self.where = where
        locus = f" at {where}" if where is not None else ""
        super().__init__(f"projection along {axis.value}: {reason}{locus}")


@dataclass(frozen=True)
class Crossing:
    """One crossing of a projected diagram.

    Loci are traversal coordinates on the polygon: edge index plus a
    rational parameter in [0, 1), so integer values are vertices.  The
    over strand is the one with the larger projected-out coordinate.
    """

    position: tuple
    over_locus: Fraction
    under_locus: Fraction
    over_depth: Fraction
    under_depth: Fraction
    is_central: bool
    sign: int


@dataclass(frozen=True)
class Diagram:
    axis: Axis
    crossings: tuple[Crossing, ...]
    pd_code: tuple[tuple[int, int, int, int], ...]
    gauss_code: tuple[str, ...]
    n_vertices: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def central_crossings(self) -> tuple[Crossing, ...]:
        return tuple(c for c in self.crossings if c.is_central)


class TripleCount(NamedTuple):
    p_x: int
    p_y: int
    p_z: int
    total: int


@dataclass(frozen=True)
class _Passage:
    index: int
    start_vertex: int  # break vertex where the passage begins
    points: tuple      # 2D points visited: uv[start], ..., uv[end]
    vertex_ids: tuple  # polygon vertex index of each point
    depths: tuple
    direction: tuple

    @property
    def a(self):
        return self.points[0]

    @property
    def b(self):
        return self.points[-1]


def _build_passages(axis, uv, depth, n):
    dirs = []
    for i in range(n):
        d = sub2(uv[(i + 1) % n], uv[i])
        if d == (0, 0):
            raise GeneralPositionViolation(
                axis, "an edge projects to a single point", where=f"edge {i}"
            )
        dirs.append(d)
    breaks = []
    for i in range(n):
        dprev, dcur = dirs[i - 1], dirs[i]
        if cross2(dprev, dcur) != 0:
            breaks.append(i)
        elif dot2(dprev, dcur) < 0:
            raise GeneralPositionViolation(
                axis, "the projection folds back on itself", where=f"vertex {i}"
            )
    if len(breaks) < 3:
        raise GeneralPositionViolation(axis, "projection collapses to a line")
    passages = []
    m = len(breaks)
    for j in range(m):
        s, e = breaks[j], breaks[(j + 1) % m]
        count = (e - s) % n
        ids = tuple((s + t) % n for t in range(count + 1))
        passages.append(
            _Passage(
                index=j,
                start_vertex=s,
                points=tuple(uv[i] for i in ids),
                vertex_ids=ids,
                depths=tuple(depth[i] for i in ids),
                direction=sub2(uv[e], uv[s]),
            )
        )
    return passages


def _locate_on_passage(axis, passage: _Passage, pt):
    """Traversal locus and depth of a 2D point on a straight passage."""
    d = passage.direction
    k = 0 if abs(d[0]) >= abs(d[1]) else 1
    sgn = 1 if d[k] > 0 else -1
    lam = sgn * pt[k]
    pts = passage.points
    for t in range(len(pts) - 1):
        lo, hi = sgn * pts[t][k], sgn * pts[t + 1][k]
        if lam == lo:
            tau = Fraction(passage.vertex_ids[t])
            return tau, Fraction(passage.depths[t])
        if lo < lam < hi:
            frac = Fraction(pt[k] - pts[t][k], pts[t + 1][k] - pts[t][k])
            dep = passage.depths[t] + frac * (passage.depths[t + 1] - passage.depths[t])
            tau = passage.vertex_ids[t] + frac
            return tau, Fraction(dep)
    if lam == sgn * pts[-1][k]:
        tau = Fraction(passage.vertex_ids[-1])
        return tau, Fraction(passage.depths[-1])
    raise GeneralPositionViolation(axis, "internal: point not on passage", where=pt)


def _neg(v):
    return (-v[0], -v[1])


def _crossing_sign(over_in, over_out, under_in, under_out) -> int:
    """Sign of a transverse crossing from strand directions at the point.

    Positive when the under strand passes from the right side to the left
    side of the (possibly bent) over strand.
    """

    def on_left(w):
        return ccw_strictly_between(over_out, _neg(over_in), w)

    enters_left = on_left(_neg(under_in))
    exits_left = on_left(under_out)
    if enters_left == exits_left:
        raise GeometryError("strands do not cross transversally")
    return 1 if exits_left else -1


def _strand_dirs(strand, passages):
    kind, which = strand
    if kind == "interior":
        d = passages[which].direction
        return d, d
    m = len(passages)
    return passages[(which - 1) % m].direction, passages[which].direction


def _strand_locus(axis, strand, passages, pt):
    kind, which = strand
    if kind == "interior":
        return _locate_on_passage(axis, passages[which], pt)
    p = passages[which]
    return Fraction(p.vertex_ids[0]), Fraction(p.depths[0])


def project_and_count(embedding: KnotEmbedding, axis: Axis) -> Diagram:
    """Project along an axis, verify general position and build the diagram."""
    report = validate_embedding(embedding)
    if not report.valid:
        raise InvalidEmbeddingError(report)

    ints, scale = embedding.integer_vertices()
    n = len(ints)
    proj = [project_triple(axis, p) for p in ints]
    uv = [(p[0], p[1]) for p in proj]
    depth = [p[2] for p in proj]

    passages = _build_passages(axis, uv, depth, n)
    m = len(passages)

    # collect incidences between non-adjacent passages, grouped by point
    points: dict[tuple, dict] = {}

    def record(pt, key, value):
        entry = points.setdefault(pt, {"interior": set(), "corner": set()})
        entry[key].add(value)

    def corner_of(passage_index, end):
        # end 0 is the corner starting the passage, end 1 the one after it
        return passage_index if end == 0 else (passage_index + 1) % m

    for j in range(m):
        for l in range(j + 1, m):
            adjacent = (l == j + 1) or (j == 0 and l == m - 1)
            cls = classify_intersection(
                (passages[j].a, passages[j].b), (passages[l].a, passages[l].b)
            )
            if isinstance(cls, Disjoint):
                continue
            if isinstance(cls, CollinearOverlap):
                raise GeneralPositionViolation(
                    axis, "two strands overlap along a line", where=f"passages {j},{l}"
                )
            if adjacent:
                continue  # the shared corner; nothing else can happen
            if isinstance(cls, TransverseInterior):
                record(cls.point, "interior", j)
                record(cls.point, "interior", l)
            else:
                if cls.end1 is None:
                    record(cls.point, "interior", j)
                else:
                    record(cls.point, "corner", corner_of(j, cls.end1))
                if cls.end2 is None:
                    record(cls.point, "interior", l)
                else:
                    record(cls.point, "corner", corner_of(l, cls.end2))

    origin = (0, 0)
    crossings_raw = []
    for pt in sorted(points, key=lambda p: (Fraction(p[0]), Fraction(p[1]))):
        entry = points[pt]
        strands = [("interior", j) for j in sorted(entry["interior"])]
        strands += [("corner", c) for c in sorted(entry["corner"])]
        if pt == origin and axis is Axis.Z:
            raise GeneralPositionViolation(
                axis, "strands meet the origin of the transvergent projection"
            )
        if len(strands) != 2:
            raise GeneralPositionViolation(
                axis, f"{len(strands)} strand passages through one point", where=pt
            )
        central = pt == origin
        if not central and any(kind == "corner" for kind, _ in strands):
            raise GeneralPositionViolation(
                axis, "a vertex projects onto a crossing", where=pt
            )
        in1, out1 = _strand_dirs(strands[0], passages)
        in2, out2 = _strand_dirs(strands[1], passages)
        try:
            if not rays_alternate(in1, out1, in2, out2):
                raise GeneralPositionViolation(
                    axis, "strands touch without crossing", where=pt
                )
        except GeometryError:
            raise GeneralPositionViolation(
                axis, "strands are tangent at a point", where=pt
            ) from None
        tau1, dep1 = _strand_locus(axis, strands[0], passages, pt)
        tau2, dep2 = _strand_locus(axis, strands[1], passages, pt)
        if dep1 == dep2:
            raise GeneralPositionViolation(
                axis, "two strands cross at equal depth", where=pt
            )
        if dep1 > dep2:
            over, under = (tau1, dep1, strands[0]), (tau2, dep2, strands[1])
        else:
            over, under = (tau2, dep2, strands[1]), (tau1, dep1, strands[0])
        o_in, o_out = _strand_dirs(over[2], passages)
        u_in, u_out = _strand_dirs(under[2], passages)
        sign = _crossing_sign(o_in, o_out, u_in, u_out)
        position = (Fraction(pt[0], scale), Fraction(pt[1], scale))
        crossings_raw.append(
            Crossing(
                position=position,
                over_locus=over[0],
                under_locus=under[0],
                over_depth=Fraction(over[1], scale),
                under_depth=Fraction(under[1], scale),
                is_central=central,
                sign=sign,
            )
        )

    return _assemble(axis, crossings_raw, n)


def _assemble(axis, crossings_raw, n_vertices) -> Diagram:
    # order loci along the traversal; arcs are numbered so that arc i
    # leaves the i-th locus, hence arc i-1 enters it
    loci = []
    for c in crossings_raw:
        loci.append((c.over_locus, "O", c))
        loci.append((c.under_locus, "U", c))
    loci.sort(key=lambda item: item[0])
    taus = [item[0] for item in loci]
    if len(set(taus)) != len(taus):
        raise GeneralPositionViolation(axis, "two crossings share a traversal locus")

    two_c = len(loci)
    first_seen: dict[int, int] = {}
    ordered: list[Crossing] = []
    for _, _, c in loci:
        if id(c) not in first_seen:
            first_seen[id(c)] = len(ordered)
            ordered.append(c)

    position_of = {}
    for idx, (tau, kind, c) in enumerate(loci, start=1):
        position_of[(id(c), kind)] = idx

    def incoming(i):
        return i - 1 if i > 1 else two_c

    pd = []
    gauss_at = [None] * two_c
    for c in ordered:
        iu = position_of[(id(c), "U")]
        io = position_of[(id(c), "O")]
        a, c_out = incoming(iu), iu
        o_in, o_out = incoming(io), io
        if c.sign > 0:
            pd.append((a, o_out, c_out, o_in))
        else:
            pd.append((a, o_in, c_out, o_out))
        label = first_seen[id(c)] + 1
        s = "+" if c.sign > 0 else "-"
        gauss_at[io - 1] = f"O{label}{s}"
        gauss_at[iu - 1] = f"U{label}{s}"

    return Diagram(
        axis=axis,
        crossings=tuple(ordered),
        pd_code=tuple(pd),
        gauss_code=tuple(gauss_at),
        n_vertices=n_vertices,
    )


def triple_count(embedding: KnotEmbedding) -> TripleCount:
    """Crossing counts of the three axis projections and their sum."""
    px = project_and_count(embedding, Axis.X).crossing_count
    py = project_and_count(embedding, Axis.Y).crossing_count
    pz = project_and_count(embedding, Axis.Z).crossing_count
    return TripleCount(px, py, pz, px + py + pz)


def parity_check(diagram: Diagram) -> bool:
    """Structural parity of a projection of a doubly symmetric embedding.

    The transvergent (along-Z) diagram must have an even crossing count and
    no central crossing; the two intravergent diagrams an odd count with
    exactly one central crossing.
    """
    centrals = len(diagram.central_crossings())
    if diagram.axis is Axis.Z:
        return diagram.crossing_count % 2 == 0 and centrals == 0
    return diagram.crossing_count % 2 == 1 and centrals == 1


def pd_code(diagram: Diagram):
    """Planar-diagram code: 4-tuples of arc labels, counterclockwise from
    the incoming under-arc, crossings in first-encounter order."""
    return diagram.pd_code


def pd_code_text(diagram: Diagram) -> str:
    return "\n".join(f"X({a},{b},{c},{d})" for a, b, c, d in diagram.pd_code)

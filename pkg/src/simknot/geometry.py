"""Exact rational geometry: points, half-turn symmetries, axis projections,
and degenerate-case-aware segment intersection.

All predicates are computed exactly over the rationals (Python ``Fraction``
or ``int``); there are no tolerances anywhere.  Degenerate configurations
(collinear overlaps, endpoint touches) are classified, never guessed.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class GeometryError(ValueError):
    """Raised for inputs outside a predicate's domain (e.g. tangent rays)."""


# --------------------------------------------------------------------------
# coordinate strings
# --------------------------------------------------------------------------

_COORD_RE = re.compile(r"^[+-]?(?:\d+\.\d+|\d+/[1-9]\d*|\d+)$")


def parse_coordinate(text: str) -> Fraction:
    """Parse a coordinate string: integer, decimal, or "p/q" with q > 0.

    Examples of accepted strings: "3", "-0.2", "-3/4".
    """
    text = text.strip()
    if not _COORD_RE.match(text):
        raise ValueError(f"invalid coordinate string: {text!r}")
    return Fraction(text)


def format_coordinate(value: Fraction) -> str:
    """Canonical string for a rational coordinate ("3" or "-3/4")."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# --------------------------------------------------------------------------
# points and axes
# --------------------------------------------------------------------------


class Axis(Enum):
    X = "X"
    Y = "Y"
    Z = "Z"


@dataclass(frozen=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    @staticmethod
    def of(x, y, z) -> "Point3":
        return Point3(Fraction(x), Fraction(y), Fraction(z))


@dataclass(frozen=True)
class Point2WithDepth:
    """A projected point: plane coordinates plus the projected-out coordinate.

    Larger depth means nearer to the viewer.
    """

    u: Fraction
    v: Fraction
    depth: Fraction


def half_turn(axis: Axis, p: Point3) -> Point3:
    """Rotate a point half a turn about a coordinate axis."""
    if axis is Axis.X:
        return Point3(p.x, -p.y, -p.z)
    if axis is Axis.Y:
        return Point3(-p.x, p.y, -p.z)
    return Point3(-p.x, -p.y, p.z)


def project(axis: Axis, p: Point3) -> Point2WithDepth:
    """Project a point along an axis; the dropped coordinate becomes depth.

    The plane coordinates keep their (x, y, z) relative order:
    along Z -> (x, y), along X -> (y, z), along Y -> (x, z).
    """
    if axis is Axis.Z:
        return Point2WithDepth(p.x, p.y, p.z)
    if axis is Axis.X:
        return Point2WithDepth(p.y, p.z, p.x)
    return Point2WithDepth(p.x, p.z, p.y)


def project_triple(axis: Axis, coords):
    """Tuple version of :func:`project` for raw (x, y, z) triples."""
    x, y, z = coords
    if axis is Axis.Z:
        return (x, y, z)
    if axis is Axis.X:
        return (y, z, x)
    return (x, z, y)


# --------------------------------------------------------------------------
# 2D primitives (work on plain (u, v) tuples of ints or Fractions)
# --------------------------------------------------------------------------


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def dot2(a, b):
    return a[0] * b[0] + a[1] * b[1]


def sub2(a, b):
    return (a[0] - b[0], a[1] - b[1])


@dataclass(frozen=True)
class Disjoint:
    pass


@dataclass(frozen=True)
class TransverseInterior:
    point: tuple


@dataclass(frozen=True)
class EndpointIncidence:
    point: tuple
    # which endpoint of each segment sits at the point: 0, 1, or None (interior)
    end1: int | None
    end2: int | None


@dataclass(frozen=True)
class CollinearOverlap:
    pass


Classification = Disjoint | TransverseInterior | EndpointIncidence | CollinearOverlap


def classify_intersection(s1, s2) -> Classification:
    """Classify the intersection of two closed 2D segments, exactly.

    Each segment is a pair of (u, v) points with distinct endpoints.
    Returns exactly one of Disjoint, TransverseInterior (a single point
    interior to both segments), EndpointIncidence (a single point that is
    an endpoint of at least one segment), or CollinearOverlap (a shared
    subsegment of positive length).
    """
    p, q = s1
    r, s = s2
    if p == q or r == s:
        raise GeometryError("segment endpoints must be distinct")
    d1 = sub2(q, p)
    d2 = sub2(s, r)
    w = sub2(r, p)
    denom = cross2(d1, d2)
    if denom != 0:
        t_num = cross2(w, d2)
        u_num = cross2(w, d1)
        if denom < 0:
            denom, t_num, u_num = -denom, -t_num, -u_num
        if not (0 <= t_num <= denom and 0 <= u_num <= denom):
            return Disjoint()
        t = Fraction(t_num, denom)
        point = (p[0] + t * d1[0], p[1] + t * d1[1])
        end1 = 0 if t_num == 0 else (1 if t_num == denom else None)
        end2 = 0 if u_num == 0 else (1 if u_num == denom else None)
        if end1 is None and end2 is None:
            return TransverseInterior(point)
        return EndpointIncidence(point, end1, end2)
    # parallel
    if cross2(d1, w) != 0:
        return Disjoint()
    # collinear: compare 1D intervals along d1
    lam_r = dot2(d1, w)
    lam_s = dot2(d1, sub2(s, p))
    lo2, hi2 = min(lam_r, lam_s), max(lam_r, lam_s)
    length = dot2(d1, d1)
    lo = max(0, lo2)
    hi = min(length, hi2)
    if lo > hi:
        return Disjoint()
    if lo < hi:
        return CollinearOverlap()
    t = Fraction(lo, length)
    point = (p[0] + t * d1[0], p[1] + t * d1[1])
    end1 = 0 if lo == 0 else 1
    end2 = 0 if lo == lam_r else 1
    return EndpointIncidence(point, end1, end2)


# --------------------------------------------------------------------------
# exact angular order around a point
# --------------------------------------------------------------------------


def _half(v) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2*pi); v must be nonzero
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


def angular_key(v):
    """Sort key placing nonzero vectors in counterclockwise order from +u."""
    return _AngularKeyed(v)


@functools.total_ordering
class _AngularKeyed:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __eq__(self, other):
        return _half(self.v) == _half(other.v) and cross2(self.v, other.v) == 0

    def __lt__(self, other):
        ha, hb = _half(self.v), _half(other.v)
        if ha != hb:
            return ha < hb
        return cross2(self.v, other.v) > 0


def rays_coincide(a, b) -> bool:
    """True if two nonzero vectors point in exactly the same direction."""
    return cross2(a, b) == 0 and dot2(a, b) > 0


def rays_alternate(a1_in, a1_out, a2_in, a2_out) -> bool:
    """Decide whether two strands through a common point genuinely cross.

    Each strand is given by its incoming and outgoing direction vectors at
    the point.  The four rays leaving the point are (-a1_in, a1_out,
    -a2_in, a2_out); the strands cross exactly when the rays alternate
    between the strands in cyclic angular order.  Raises GeometryError if
    any two rays are angularly coincident (a tangency, not decidable).
    """
    rays = [
        ((-a1_in[0], -a1_in[1]), 1),
        ((a1_out[0], a1_out[1]), 1),
        ((-a2_in[0], -a2_in[1]), 2),
        ((a2_out[0], a2_out[1]), 2),
    ]
    for v, _ in rays:
        if v == (0, 0):
            raise GeometryError("ray directions must be nonzero")
    for i in range(4):
        for j in range(i + 1, 4):
            if rays_coincide(rays[i][0], rays[j][0]):
                raise GeometryError("coincident rays: tangency at the point")
    rays.sort(key=lambda rv: angular_key(rv[0]))
    labels = [label for _, label in rays]
    return labels[0] != labels[1] and labels[1] != labels[2] and labels[2] != labels[3]


def ccw_strictly_between(a, b, w) -> bool:
    """True if nonzero vector w lies strictly inside the CCW sector a -> b."""
    cab = cross2(a, b)
    if cab > 0:
        return cross2(a, w) > 0 and cross2(w, b) > 0
    if cab < 0:
        return cross2(a, w) > 0 or cross2(w, b) > 0
    # a and b collinear: either equal (empty sector) or opposite (half-plane)
    if dot2(a, b) > 0:
        return False
    return cross2(a, w) > 0


# --------------------------------------------------------------------------
# 3D primitives (tuples of ints or Fractions)
# --------------------------------------------------------------------------


def sub3(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _drop_axis_2d(p, k):
    return tuple(p[i] for i in range(3) if i != k)


def segments_intersect_3d(p, q, r, s) -> bool:
    """True if the closed 3D segments pq and rs share at least one point."""
    d1 = sub3(q, p)
    d2 = sub3(s, r)
    w = sub3(r, p)
    n = cross3(d1, d2)
    if n != (0, 0, 0):
        if dot3(n, w) != 0:
            return False  # skew lines
        # coplanar, non-parallel: reduce along the dominant normal axis
        k = max(range(3), key=lambda i: abs(n[i]))
        cls = classify_intersection(
            (_drop_axis_2d(p, k), _drop_axis_2d(q, k)),
            (_drop_axis_2d(r, k), _drop_axis_2d(s, k)),
        )
        return not isinstance(cls, Disjoint)
    # parallel
    if cross3(d1, w) != (0, 0, 0):
        return False
    # collinear: 1D interval overlap along d1
    lam_r = dot3(d1, w)
    lam_s = dot3(d1, sub3(s, p))
    length = dot3(d1, d1)
    return max(0, min(lam_r, lam_s)) <= min(length, max(lam_r, lam_s))


def edges_fold_back(u, v, w) -> bool:
    """True if edges u->v and v->w overlap beyond their shared vertex v."""
    a = sub3(u, v)
    b = sub3(w, v)
    return cross3(a, b) == (0, 0, 0) and dot3(a, b) > 0

"""Deterministic SVG emission: projection panels with over/under gaps and
colored chord-diagram circles.

Geometry is computed exactly and converted to fixed-precision decimals
only at the last moment, so repeated renders are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chords import ChordDiagram
from .diagram import project_and_count
from .geometry import Axis, project_triple
from .polygon import KnotEmbedding

AXIS_COLORS = {Axis.Z: "#1f77b4", Axis.X: "#d62728", Axis.Y: "#2ca02c"}


@dataclass(frozen=True)
class RenderSpec:
    panel_size: int = 420
    gap_fraction: Fraction = Fraction(1, 25)
    stroke_width: float = 2.0

    def __post_init__(self):
        if not (0 < self.gap_fraction < Fraction(1, 4)):
            raise ValueError("gap fraction must lie in (0, 1/4)")


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _svg_header(size: int) -> str:
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">\n'
    )


class _Mapper:
    def __init__(self, points, size, pad=24.0):
        us = [p[0] for p in points]
        vs = [p[1] for p in points]
        lo_u, hi_u = min(us), max(us)
        lo_v, hi_v = min(vs), max(vs)
        span = max(hi_u - lo_u, hi_v - lo_v, Fraction(1))
        self.scale = (size - 2 * pad) / float(span)
        self.pad = pad
        self.lo_u = lo_u
        self.hi_v = hi_v
        # center the smaller extent
        self.off_u = (float(span) - float(hi_u - lo_u)) / 2 * self.scale
        self.off_v = (float(span) - float(hi_v - lo_v)) / 2 * self.scale

    def map(self, p):
        x = self.pad + self.off_u + float(p[0] - self.lo_u) * self.scale
        y = self.pad + self.off_v + float(self.hi_v - p[1]) * self.scale
        return x, y


def diagram_svg(embedding: KnotEmbedding, axis: Axis, spec: RenderSpec = RenderSpec()) -> str:
    """One projection panel; the under strand is broken at each crossing."""
    diagram = project_and_count(embedding, axis)
    n = len(embedding.vertices)
    uv = []
    for p in embedding.vertices:
        u, v, _ = project_triple(axis, tuple(p))
        uv.append((u, v))

    # cut intervals (in edge parameter units) around each under passage
    gap = spec.gap_fraction
    cuts: dict[int, list[tuple[Fraction, Fraction]]] = {}
    for crossing in diagram.crossings:
        tau = crossing.under_locus
        k = int(tau)
        t = tau - k
        half = Fraction(gap, 2)
        if t == 0:
            cuts.setdefault((k - 1) % n, []).append((1 - half, Fraction(1)))
            cuts.setdefault(k, []).append((Fraction(0), half))
        else:
            lo = max(Fraction(0), t - half)
            hi = min(Fraction(1), t + half)
            cuts.setdefault(k, []).append((lo, hi))

    mapper = _Mapper(uv, spec.panel_size)
    parts = [_svg_header(spec.panel_size)]
    parts.append(
        f'<g fill="none" stroke="#111111" stroke-width="{_fmt(spec.stroke_width)}" '
        'stroke-linecap="round">\n'
    )
    for i in range(n):
        a = uv[i]
        b = uv[(i + 1) % n]
        kept = [(Fraction(0), Fraction(1))]
        for lo, hi in sorted(cuts.get(i, [])):
            nxt = []
            for s, e in kept:
                if hi <= s or lo >= e:
                    nxt.append((s, e))
                    continue
                if s < lo:
                    nxt.append((s, lo))
                if hi < e:
                    nxt.append((hi, e))
            kept = nxt
        for s, e in kept:
            if s == e:
                continue
            p1 = mapper.map((a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])))
            p2 = mapper.map((a[0] + e * (b[0] - a[0]), a[1] + e * (b[1] - a[1])))
            parts.append(
                f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" '
                f'x2="{_fmt(p2[0])}" y2="{_fmt(p2[1])}"/>\n'
            )
    parts.append("</g>\n")
    label = f"projection along {axis.value}: {diagram.crossing_count} crossings"
    parts.append(
        f'<text x="{_fmt(spec.panel_size / 2)}" y="16" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" fill="#111111">{label}</text>\n'
    )
    parts.append("</svg>\n")
    return "".join(parts)


def chords_svg(cd: ChordDiagram, spec: RenderSpec = RenderSpec()) -> str:
    """Chord-diagram circle with numbered polygon vertices.

    Chords are colored by projection axis (Z blue, X red, Y green); the
    central chords are drawn heavier.
    """
    import math

    size = spec.panel_size
    cx = cy = size / 2
    radius = size / 2 - 40.0
    n = cd.n_vertices

    def at(tau: Fraction, r=radius):
        angle = 2 * math.pi * float(Fraction(tau) / n) - math.pi / 2
        return cx + r * math.cos(angle), cy + r * math.sin(angle)

    parts = [_svg_header(size)]
    parts.append(
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius)}" '
        'fill="none" stroke="#999999" stroke-width="1.5"/>\n'
    )
    for k in range(n):
        px, py = at(Fraction(k))
        qx, qy = at(Fraction(k), radius + 6)
        tx, ty = at(Fraction(k), radius + 18)
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{_fmt(py)}" x2="{_fmt(qx)}" y2="{_fmt(qy)}" '
            'stroke="#999999" stroke-width="1"/>\n'
        )
        parts.append(
            f'<text x="{_fmt(tx)}" y="{_fmt(ty + 3)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10" fill="#555555">{k + 1}</text>\n'
        )
    for chord in cd.chords:
        t1, t2 = sorted(chord.loci)
        p1, p2 = at(t1), at(t2)
        color = AXIS_COLORS[chord.axis]
        width = 2.6 if chord.is_central else 1.4
        parts.append(
            f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" '
            f'x2="{_fmt(p2[0])}" y2="{_fmt(p2[1])}" '
            f'stroke="{color}" stroke-width="{_fmt(width)}"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)

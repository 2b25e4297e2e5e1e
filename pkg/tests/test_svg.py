"""SVG emission: spec guards, determinism, under-strand gaps."""

from fractions import Fraction

import pytest

from simknot.chords import simultaneous_chords
from simknot.families import TwistSpec, builtin_quarter, twist_quarter_unified
from simknot.geometry import Axis
from simknot.polygon import symmetrize
from simknot.svg import RenderSpec, chords_svg, diagram_svg


def test_render_spec_gap_guard():
    RenderSpec(gap_fraction=Fraction(1, 25))
    with pytest.raises(ValueError):
        RenderSpec(gap_fraction=Fraction(1, 2))
    with pytest.raises(ValueError):
        RenderSpec(gap_fraction=Fraction(0))


def test_diagram_svg_deterministic_and_gapped():
    emb = symmetrize(twist_quarter_unified(TwistSpec(1, -1)))
    first = diagram_svg(emb, Axis.Z)
    assert first == diagram_svg(emb, Axis.Z)
    assert "4 crossings" in first
    # each of the 4 under-passages splits one edge: more lines than edges
    assert first.count("<line") > len(emb.vertices)


def test_central_vertex_gap_trims_adjacent_edges():
    # the under locus sits on a vertex, so the two incident edges are
    # shortened (not split); a narrower gap moves the trimmed endpoints
    emb = symmetrize(builtin_quarter("unknot"))
    out = diagram_svg(emb, Axis.X)
    assert "1 crossings" in out
    assert out.count("<line") == len(emb.vertices)
    narrower = diagram_svg(emb, Axis.X, RenderSpec(gap_fraction=Fraction(1, 100)))
    assert narrower != out


def test_chords_svg_lists_vertex_numbers():
    emb = symmetrize(twist_quarter_unified(TwistSpec(1, -1)))
    out = chords_svg(simultaneous_chords(emb))
    n = len(emb.vertices)
    for k in (1, n // 2, n):
        assert f">{k}</text>" in out

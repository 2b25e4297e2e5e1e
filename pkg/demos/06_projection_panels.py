"""Render the three views of the figure-eight knot embedding as SVG.

Over-strands are drawn through; the under-strand is broken around each
crossing with a small gap, so the panels read like ordinary knot diagrams.
Writes fig8_projection_{x,y,z}.svg next to this script.
"""

from pathlib import Path

from simknot import Axis, TwistSpec, symmetrize, triple_count, twist_quarter_unified
from simknot.svg import RenderSpec, diagram_svg

embedding = symmetrize(twist_quarter_unified(TwistSpec(1, 1)))
counts = triple_count(embedding)
print(f"figure-eight embedding: counts {counts.p_x} {counts.p_y} {counts.p_z}, sum {counts.total}")

spec = RenderSpec(panel_size=480)
here = Path(__file__).parent
for axis in Axis:
    out = here / f"fig8_projection_{axis.value.lower()}.svg"
    out.write_text(diagram_svg(embedding, axis, spec))
    print(f"wrote {out}")

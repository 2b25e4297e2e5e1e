"""Chord diagrams of the trefoil's three views, drawn on one circle.

Each crossing becomes a chord joining its two passage positions along the
polygon.  The half-turns act on that circle as two mirrors (the in-plane
axes) and the half shift (the vertical axis), and each single-view chord
diagram is symmetric under its own involution; in the side views exactly
the central chord lies on the mirror axis.  A further exact coincidence:
some top-view chords share an endpoint with a side-view chord at the
same rational position strictly between two vertices.

Writes trefoil_chords.svg next to this script.
"""

from pathlib import Path

from simknot import Axis, TwistSpec, check_chord_symmetry, chords, simultaneous_chords, symmetrize, twist_quarter_unified
from simknot.chords import shared_endpoints
from simknot.svg import chords_svg

embedding = symmetrize(twist_quarter_unified(TwistSpec(1, -1)))

for axis in Axis:
    cd = chords(embedding, axis)
    ok = check_chord_symmetry(cd, axis)
    centrals = sum(1 for ch in cd.chords if ch.is_central)
    print(f"along {axis.value}: {len(cd.chords)} chords, {centrals} central, mirror symmetry: {ok}")

sim = simultaneous_chords(embedding)
print(f"\nsimultaneous diagram: {len(sim.chords)} chords on a {sim.n_vertices}-vertex circle")

pairs = shared_endpoints(sim)
print(f"exact endpoint coincidences between different views: {len(pairs)}")
for a, b, tau in pairs[:4]:
    print(f"  {a.axis.value}-chord and {b.axis.value}-chord meet at position {tau}")

out = Path(__file__).with_name("trefoil_chords.svg")
out.write_text(chords_svg(sim))
print(f"\nwrote {out}")

"""A 20-vertex (4,5) torus knot whose three views cost 62 crossings.

The quarter uses six vertices with a couple of non-integer coordinates to
keep the projections in general position.  The top view realizes 16
crossings and the side views 19 and 27.  The sum 62 is notable: it is
less than four times 16, unlike every twist-knot embedding here.
"""

from simknot import (
    Axis,
    builtin_quarter,
    fingerprint,
    identify,
    project_and_count,
    symmetrize,
    triple_count,
)

embedding = symmetrize(builtin_quarter("T45"))
counts = triple_count(embedding)
print(f"counts along x/y/z: {counts.p_x} {counts.p_y} {counts.p_z}, sum {counts.total}")
print(f"sum < 4 * 16: {counts.total} < 64 -> {counts.total < 64}")

print("\nidentification from each projection (they must agree):")
for axis in Axis:
    diagram = project_and_count(embedding, axis)
    fp = fingerprint(list(diagram.pd_code))
    names = identify(fp)
    print(
        f"  along {axis.value}: {diagram.crossing_count:2d} crossings, "
        f"determinant {fp.determinant}, candidates {names}"
    )

fp = fingerprint(list(project_and_count(embedding, Axis.Z).pd_code))
print("\nAlexander polynomial (lowest degree first):", fp.alexander.coeffs_lowest_first())

"""The smallest doubly symmetric example: an 8-vertex trivial knot.

One quarter of the polygon runs from (4,0,0) on the x-axis over (3,3,-1)
to (0,4,0) on the y-axis.  Mirroring it with the three half-turns closes
the curve; the top view has no crossings at all and each side view has a
single crossing at the plane origin, so the three projections cost only
two crossings in total -- which matches the parity lower bound 3*0+2 for
an unknotted curve, so no symmetric embedding can do better.
"""

from simknot import (
    Axis,
    builtin_quarter,
    format_coordinate,
    project_and_count,
    symmetrize,
    triple_count,
    validate_embedding,
)


def show(p):
    return "(" + ", ".join(format_coordinate(c) for c in p) + ")"


quarter = builtin_quarter("unknot")
print("quarter vertices:")
for p in quarter.vertices:
    print("   ", show(p))

embedding = symmetrize(quarter)
print(f"\nclosed polygon has {len(embedding.vertices)} vertices "
      f"(= 4*{len(quarter.vertices)} - 4):")
for p in embedding.vertices:
    print("   ", show(p))

report = validate_embedding(embedding)
print("\nvalid embedding:", report.valid)

counts = triple_count(embedding)
print(f"crossings along x/y/z: {counts.p_x} {counts.p_y} {counts.p_z}, sum {counts.total}")

for axis in (Axis.X, Axis.Y):
    diagram = project_and_count(embedding, axis)
    crossing = diagram.crossings[0]
    print(
        f"along {axis.value}: central crossing at {tuple(crossing.position)}, "
        f"over depth {crossing.over_depth}, under depth {crossing.under_depth}, "
        f"sign {crossing.sign:+d}"
    )

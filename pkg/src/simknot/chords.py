"""Chord diagrams of the axis projections and their mirror symmetries.

The knot traversal is a circle parameterized by the traversal coordinate
(edge index plus rational parameter, modulo the vertex count); each
crossing contributes one chord joining its two passage loci.  The three
half-turns act on this circle combinatorially: the strong inversions as
reflections, the z-half-turn as the half shift.  Chord diagrams of the
projections inherit these as mirror symmetries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, project_and_count
from .geometry import Axis, half_turn
from .polygon import KnotEmbedding


class SymmetryStructureError(ValueError):
    """The embedding's half-turn does not act on the vertex cycle as expected."""


@dataclass(frozen=True)
class CircleInvolution:
    """An involution of the traversal circle R/nZ.

    kind "reflection": tau -> (offset - tau) mod n (a mirror symmetry);
    kind "shift": tau -> (tau + offset) mod n (the free half rotation).
    """

    kind: str
    offset: Fraction
    modulus: int

    def apply(self, tau: Fraction) -> Fraction:
        if self.kind == "reflection":
            return (self.offset - tau) % self.modulus
        return (tau + self.offset) % self.modulus

    def fixed_points(self) -> tuple[Fraction, ...]:
        if self.kind == "shift":
            return ()
        half = Fraction(self.offset, 2)
        return (half % self.modulus, (half + Fraction(self.modulus, 2)) % self.modulus)


@dataclass(frozen=True)
class Chord:
    loci: frozenset
    axis: Axis
    is_central: bool

    def image(self, involution: CircleInvolution) -> frozenset:
        return frozenset(involution.apply(t) for t in self.loci)


@dataclass(frozen=True)
class ChordDiagram:
    n_vertices: int
    chords: tuple[Chord, ...]
    involutions: dict

    def chord_sets(self, axis: Axis | None = None) -> set:
        return {
            ch.loci for ch in self.chords if axis is None or ch.axis is axis
        }

    def axes(self) -> set:
        return {ch.axis for ch in self.chords}


def circle_involutions(embedding: KnotEmbedding) -> dict:
    """The actions of the three half-turns on the traversal circle."""
    verts = list(embedding.vertices)
    n = len(verts)
    index = {}
    for i, p in enumerate(verts):
        if p in index:
            raise SymmetryStructureError("repeated vertex in embedding")
        index[p] = i
    out = {}
    for axis, kind in ((Axis.X, "reflection"), (Axis.Y, "reflection"), (Axis.Z, "shift")):
        perm = []
        for p in verts:
            q = half_turn(axis, p)
            j = index.get(q)
            if j is None:
                raise SymmetryStructureError(f"vertices not closed under the {axis.value} half-turn")
            perm.append(j)
        if kind == "reflection":
            s = perm[0]
            if any(perm[i] != (s - i) % n for i in range(n)):
                raise SymmetryStructureError(
                    f"{axis.value} half-turn does not reverse the vertex cycle"
                )
            out[axis] = CircleInvolution("reflection", Fraction(s), n)
        else:
            h = perm[0]
            if h * 2 % n != 0 or h == 0 or any(perm[i] != (h + i) % n for i in range(n)):
                raise SymmetryStructureError(
                    "z half-turn does not shift the vertex cycle by half"
                )
            out[axis] = CircleInvolution("shift", Fraction(h), n)
    return out


def _chords_of_diagram(diagram: Diagram) -> list[Chord]:
    return [
        Chord(
            loci=frozenset((c.over_locus % diagram.n_vertices, c.under_locus % diagram.n_vertices)),
            axis=diagram.axis,
            is_central=c.is_central,
        )
        for c in diagram.crossings
    ]


def chords(embedding: KnotEmbedding, axis: Axis) -> ChordDiagram:
    """Chord diagram of one projection: one chord per crossing."""
    diagram = project_and_count(embedding, axis)
    return ChordDiagram(
        n_vertices=len(embedding.vertices),
        chords=tuple(_chords_of_diagram(diagram)),
        involutions=circle_involutions(embedding),
    )


def simultaneous_chords(embedding: KnotEmbedding) -> ChordDiagram:
    """All three projections' chords on one circle, colored by axis."""
    chs: list[Chord] = []
    for axis in (Axis.X, Axis.Y, Axis.Z):
        chs.extend(_chords_of_diagram(project_and_count(embedding, axis)))
    return ChordDiagram(
        n_vertices=len(embedding.vertices),
        chords=tuple(chs),
        involutions=circle_involutions(embedding),
    )


def shared_endpoints(cd: ChordDiagram) -> list[tuple[Chord, Chord, Fraction]]:
    """Pairs of different-axis chords with an exactly coinciding endpoint."""
    out = []
    chs = cd.chords
    for i in range(len(chs)):
        for j in range(i + 1, len(chs)):
            if chs[i].axis is chs[j].axis:
                continue
            common = chs[i].loci & chs[j].loci
            for tau in sorted(common):
                out.append((chs[i], chs[j], tau))
    return out


def check_chord_symmetry(cd: ChordDiagram, axis: Axis) -> bool:
    """Verify the mirror symmetry of a single-axis chord diagram.

    Along Z the chord set must be invariant under both reflections induced
    by the strong inversions.  Along X or Y it must be invariant under the
    projection axis's own reflection, with exactly one setwise-fixed chord:
    the central one, lying on the mirror axis (its endpoints are the two
    fixed points of the involution).
    """
    if cd.axes() - {axis}:
        raise ValueError("chord diagram mixes axes; pass a single-axis diagram")
    chord_sets = cd.chord_sets()
    if axis is Axis.Z:
        for sym_axis in (Axis.X, Axis.Y):
            inv = cd.involutions[sym_axis]
            if {frozenset(inv.apply(t) for t in s) for s in chord_sets} != chord_sets:
                return False
        return True
    inv = cd.involutions[axis]
    if {frozenset(inv.apply(t) for t in s) for s in chord_sets} != chord_sets:
        return False
    fixed = [ch for ch in cd.chords if ch.image(inv) == ch.loci]
    if len(fixed) != 1 or not fixed[0].is_central:
        return False
    return fixed[0].loci == frozenset(inv.fixed_points())

"""Chord diagrams of projections and their mirror symmetries."""

from fractions import Fraction

import pytest

from simknot.chords import (
    Chord,
    ChordDiagram,
    check_chord_symmetry,
    chords,
    circle_involutions,
    shared_endpoints,
    simultaneous_chords,
)
from simknot.diagram import project_and_count
from simknot.families import TwistSpec, builtin_quarter, twist_quarter_unified
from simknot.geometry import Axis
from simknot.polygon import symmetrize


@pytest.fixture(scope="module")
def trefoil():
    return symmetrize(twist_quarter_unified(TwistSpec(1, -1)))


@pytest.fixture(scope="module")
def trivial():
    return symmetrize(builtin_quarter("unknot"))


FIXTURES = [
    lambda: symmetrize(builtin_quarter("unknot")),
    lambda: symmetrize(twist_quarter_unified(TwistSpec(1, -1))),
    lambda: symmetrize(twist_quarter_unified(TwistSpec(1, 1))),
    lambda: symmetrize(twist_quarter_unified(TwistSpec(2, 1))),
    lambda: symmetrize(builtin_quarter("T45")),
]


class TestChordExtraction:
    def test_trivial_intravergent_single_central_chord(self, trivial):
        cd = chords(trivial, Axis.X)
        assert len(cd.chords) == 1
        assert cd.chords[0].is_central

    def test_trefoil_counts_per_axis(self, trefoil):
        assert len(chords(trefoil, Axis.Z).chords) == 4
        counts = sorted(
            len(chords(trefoil, axis).chords) for axis in (Axis.X, Axis.Y)
        )
        assert counts == [3, 7]

    def test_chord_count_equals_crossing_count_everywhere(self):
        for make in FIXTURES:
            emb = make()
            for axis in Axis:
                diagram = project_and_count(emb, axis)
                cd = chords(emb, axis)
                assert len(cd.chords) == diagram.crossing_count

    def test_loci_distinct_within_one_axis(self, trefoil):
        for axis in Axis:
            cd = chords(trefoil, axis)
            taus = [t for ch in cd.chords for t in ch.loci]
            assert len(taus) == len(set(taus))


class TestSimultaneous:
    def test_trefoil_has_14_chords(self, trefoil):
        assert len(simultaneous_chords(trefoil).chords) == 14

    def test_trivial_has_2_chords(self, trivial):
        assert len(simultaneous_chords(trivial).chords) == 2

    def test_trefoil_z_chord_shares_endpoint_with_intravergent(self, trefoil):
        sim = simultaneous_chords(trefoil)
        pairs = shared_endpoints(sim)
        z_pairs = [
            (a, b) for a, b, _ in pairs if Axis.Z in (a.axis, b.axis)
        ]
        assert z_pairs, "expected an exact endpoint coincidence"


class TestInvolutions:
    def test_structure(self, trefoil):
        inv = circle_involutions(trefoil)
        n = len(trefoil.vertices)
        assert inv[Axis.X].kind == inv[Axis.Y].kind == "reflection"
        assert inv[Axis.Z].kind == "shift"
        assert inv[Axis.Z].offset == Fraction(n, 2)
        for axis in Axis:
            for tau in (Fraction(0), Fraction(7, 3), Fraction(n - 1)):
                assert inv[axis].apply(inv[axis].apply(tau)) == tau % n

    def test_z_shift_fixed_point_free_on_z_chords(self, trefoil):
        cd = chords(trefoil, Axis.Z)
        shift = cd.involutions[Axis.Z]
        assert shift.fixed_points() == ()
        for ch in cd.chords:
            assert ch.image(shift) != ch.loci


class TestSymmetryCheck:
    def test_all_fixture_diagrams_pass(self):
        for make in FIXTURES:
            emb = make()
            for axis in Axis:
                assert check_chord_symmetry(chords(emb, axis), axis)

    def test_central_chord_lies_on_mirror_axis(self, trefoil):
        for axis in (Axis.X, Axis.Y):
            cd = chords(trefoil, axis)
            inv = cd.involutions[axis]
            central = [ch for ch in cd.chords if ch.is_central]
            assert len(central) == 1
            assert central[0].loci == frozenset(inv.fixed_points())

    def test_perturbed_chord_fails(self, trefoil):
        cd = chords(trefoil, Axis.Z)
        chs = list(cd.chords)
        loci = sorted(chs[0].loci)
        broken = Chord(
            loci=frozenset((loci[0] + Fraction(1, 19), loci[1])),
            axis=chs[0].axis,
            is_central=chs[0].is_central,
        )
        perturbed = ChordDiagram(cd.n_vertices, tuple([broken] + chs[1:]), cd.involutions)
        assert not check_chord_symmetry(perturbed, Axis.Z)

    def test_mixed_axis_diagram_rejected(self, trefoil):
        with pytest.raises(ValueError):
            check_chord_symmetry(simultaneous_chords(trefoil), Axis.Z)

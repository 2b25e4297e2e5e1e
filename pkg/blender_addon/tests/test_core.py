"""Headless tests of the add-on logic (no Blender required)."""

from fractions import Fraction

import pytest

from simknot_blender import core

TRIVIAL_STRINGS = [("4", "0", "0"), ("3", "3", "-1"), ("0", "4", "0")]

TRIVIAL_FILE = core.quarter_file_text("unknot", "1/5", TRIVIAL_STRINGS)


class TestSnapping:
    def test_lattice_snap(self):
        assert core.snap_to_lattice(0.2) == Fraction(1, 5)
        assert core.snap_to_lattice(-0.4000003) == Fraction(-2, 5)
        assert core.snap_to_lattice(3.0) == 3

    def test_stored_strings_survive_float_round_trip(self):
        floats = [(4.0, 0.0, 0.0), (3.0000001, 3.0, -1.0), (0.0, 4.0, 0.0)]
        stored = {i: s for i, s in enumerate(TRIVIAL_STRINGS)}
        assert core.vertex_strings(floats, stored) == TRIVIAL_STRINGS

    def test_edited_vertex_resnapped(self):
        floats = [(4.0, 0.0, 0.0), (3.0, 3.0, -0.6000001), (0.0, 4.0, 0.0)]
        stored = {i: s for i, s in enumerate(TRIVIAL_STRINGS)}
        out = core.vertex_strings(floats, stored)
        assert out[0] == TRIVIAL_STRINGS[0]
        assert out[2] == TRIVIAL_STRINGS[2]
        assert out[1] == ("3", "3", "-3/5")

    def test_endpoint_snapping(self):
        strings = [("4", "0.0000005", "0"), ("3", "3", "-1"), ("0.0000001", "4", "0")]
        # floats that survive vertex_strings carry tiny axis offsets; the
        # endpoint snap zeroes them
        snapped = core.snap_endpoints_onto_axes(
            [("4", "0", "0"), ("3", "3", "-1"), ("0", "4", "0")]
        )
        assert snapped == TRIVIAL_STRINGS

    def test_endpoints_on_same_axis_rejected(self):
        with pytest.raises(core.QuarterShapeError):
            core.snap_endpoints_onto_axes([("4", "0", "0"), ("3", "3", "-1"), ("2", "0", "0")])

    def test_endpoint_off_axis_rejected(self):
        with pytest.raises(core.QuarterShapeError):
            core.snap_endpoints_onto_axes([("4", "1", "0"), ("0", "4", "0")])


class TestFullPolygon:
    def test_trivial_quarter_gives_example_polygon(self):
        closed = core.full_polygon(TRIVIAL_STRINGS)
        assert [tuple(int(c) for c in p) for p in closed] == [
            (4, 0, 0),
            (3, 3, -1),
            (0, 4, 0),
            (-3, 3, 1),
            (-4, 0, 0),
            (-3, -3, -1),
            (0, -4, 0),
            (3, -3, 1),
        ]

    def test_vertex_count(self):
        strings = [("0", "2", "0"), ("1", "-1/5", "-2"), ("2", "-5", "-6"), ("-4", "-7", "-7"), ("-4", "0", "0")]
        assert len(core.full_polygon(strings)) == 4 * 5 - 4

    def test_deterministic(self):
        assert core.full_polygon(TRIVIAL_STRINGS) == core.full_polygon(TRIVIAL_STRINGS)


class TestFileFormat:
    def test_parse_round_trip_is_byte_identical(self):
        name, delta, strings = core.parse_quarter_text(TRIVIAL_FILE)
        assert core.quarter_file_text(name, delta, strings) == TRIVIAL_FILE

    def test_default_delta(self):
        text = '{"name": "x", "vertices": [["1", "0", "0"], ["0", "1", "0"]]}'
        _, delta, _ = core.parse_quarter_text(text)
        assert delta == "1/5"

    def test_malformed_rejected(self):
        with pytest.raises(Exception):
            core.parse_quarter_text("nope")
        with pytest.raises(Exception):
            core.parse_quarter_text('{"name": "x", "vertices": [["1", "0"]]}')

    def test_single_edit_changes_single_row(self):
        name, delta, strings = core.parse_quarter_text(TRIVIAL_FILE)
        edited = list(strings)
        edited[1] = ("3", "3", "-3/5")
        before = core.quarter_file_text(name, delta, strings).splitlines()
        after = core.quarter_file_text(name, delta, edited).splitlines()
        assert sum(1 for a, b in zip(before, after) if a != b) == 1


class TestCountParsing:
    def test_parse_count_output(self):
        assert core.parse_count_output("1 1 0 2\n") == (1, 1, 0, 2)
        assert core.parse_count_output("noise\n7 3 4 14\n") == (7, 3, 4, 14)

    def test_inconsistent_line_rejected(self):
        with pytest.raises(ValueError):
            core.parse_count_output("1 1 0 5")

    def test_format(self):
        assert core.format_counts((1, 1, 0, 2)) == "1 1 0 | sum 2"

    def test_missing_cli_reported(self):
        result = core.run_count(["/nonexistent/simknot-cli"], TRIVIAL_FILE)
        assert not result.ok
        assert "not found" in result.message


class TestScheduler:
    def test_stale_results_discarded(self):
        session = core.AddonSession()
        t1 = session.scheduler.begin()
        t2 = session.scheduler.begin()
        assert not session.publish(t1, core.CountResult(True, (1, 1, 0, 2)))
        assert session.last_counts is None
        assert session.publish(t2, core.CountResult(True, (7, 3, 4, 14)))
        assert session.panel_text() == "7 3 4 | sum 14"

    def test_error_message_shown_verbatim(self):
        session = core.AddonSession()
        token = session.scheduler.begin()
        session.publish(token, core.CountResult(False, message="error: general-position: x"))
        assert session.panel_text() == "error: general-position: x"

    def test_initial_state(self):
        session = core.AddonSession()
        assert session.stale
        assert session.panel_text() == "counts not available"


def test_addon_module_imports_without_bpy():
    import simknot_blender

    assert simknot_blender.bpy is None
    assert simknot_blender.bl_info["category"] == "Add Curve"

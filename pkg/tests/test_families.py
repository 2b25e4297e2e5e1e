"""Twist-family generators, built-in quarters, closed-form verification."""

from fractions import Fraction

import pytest

from simknot.diagram import triple_count
from simknot.families import (
    BoundRecord,
    TwistSpec,
    builtin_quarter,
    sim_lower_bound,
    twist_quarter_case,
    twist_quarter_unified,
    verify_twist_table,
)
from simknot.geometry import Point3
from simknot.polygon import symmetrize, validate_embedding

D = Fraction(1, 5)


def pts(raw):
    return tuple(Point3.of(*p) for p in raw)


class TestCaseGenerators:
    def test_case1_m0_printed_coordinates(self):
        quarter = twist_quarter_case(1, 0, D)
        assert quarter.vertices == pts(
            [
                (0, 2, 0),
                (1, Fraction(-1, 5), -2),
                (2, -3, Fraction(1, 5)),
                (3, -6, 5),
                (-4, -7, 7),
                (-4, 0, 0),
            ]
        )

    def test_case3_m0_coordinates(self):
        quarter = twist_quarter_case(3, 0, D)
        assert quarter.vertices == pts(
            [
                (0, 2, 0),
                (1, Fraction(-1, 5), -2),
                (2, -5, -6),
                (-4, -7, -7),
                (-4, 0, 0),
            ]
        )

    def test_case1_m1_has_ten_vertices(self):
        assert len(twist_quarter_case(1, 1, D).vertices) == 10

    @pytest.mark.parametrize("case", [2, 4])
    def test_even_cases_reject_m0(self, case):
        with pytest.raises(ValueError):
            twist_quarter_case(case, 0, D)

    @pytest.mark.parametrize("case,m", [(1, -1), (3, -1), (5, 0)])
    def test_out_of_range(self, case, m):
        with pytest.raises(ValueError):
            twist_quarter_case(case, m, D)


class TestUnifiedGenerator:
    @pytest.mark.parametrize("k", range(1, 10))
    @pytest.mark.parametrize("rho", [1, -1])
    def test_agrees_with_case_recipes(self, k, rho):
        unified = twist_quarter_unified(TwistSpec(k, rho, D))
        if rho == 1:
            case, m = (1, (k - 1) // 2) if k % 2 == 1 else (2, k // 2)
        else:
            case, m = (3, (k - 1) // 2) if k % 2 == 1 else (4, k // 2)
        assert unified.vertices == twist_quarter_case(case, m, D).vertices

    def test_crossing_numbers(self):
        assert TwistSpec(1, 1).crossing_number == 4
        assert TwistSpec(1, -1).crossing_number == 3
        assert TwistSpec(3, 1).crossing_number == 8

    def test_parameter_checks(self):
        with pytest.raises(ValueError):
            TwistSpec(0, 1)
        with pytest.raises(ValueError):
            TwistSpec(1, 2)
        with pytest.raises(ValueError):
            TwistSpec(1, 1, Fraction(1, 2))


class TestBuiltins:
    def test_unknot(self):
        assert builtin_quarter("unknot").vertices == pts([(4, 0, 0), (3, 3, -1), (0, 4, 0)])

    def test_t45(self):
        quarter = builtin_quarter("T45", D)
        assert quarter.vertices == pts(
            [
                (-12, 0, 0),
                (Fraction(-1, 5), 6, -5),
                (3, Fraction(1, 5), Fraction(-3, 4)),
                (Fraction(-1, 5), -3, 1),
                (-6, Fraction(1, 5), 2),
                (0, 12, 0),
            ]
        )

    def test_t45_symmetrizes_to_20_vertices(self):
        assert len(symmetrize(builtin_quarter("T45")).vertices) == 20

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            builtin_quarter("nope")


class TestLowerBound:
    @pytest.mark.parametrize("cr,bound", [(3, 10), (0, 2), (16, 50), (4, 14), (7, 22)])
    def test_values(self, cr, bound):
        assert sim_lower_bound(cr) == bound

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            sim_lower_bound(-1)

    def test_bound_record_guard(self):
        BoundRecord(cr=3, lower=10, witness_sum=14)
        with pytest.raises(ValueError):
            BoundRecord(cr=3, lower=10, witness_sum=9)


TABLE_ROWS = {
    # (k, rho) -> (n, p_z, intravergent pair, sum)
    (1, -1): (3, 4, {3, 7}, 14),
    (1, 1): (4, 4, {5, 13}, 22),
    (2, -1): (5, 6, {5, 19}, 30),
    (2, 1): (6, 6, {7, 25}, 38),
    (3, -1): (7, 8, {7, 31}, 46),
    (3, 1): (8, 8, {9, 37}, 54),
}


class TestTwistTable:
    def test_published_rows(self):
        for (k, rho), (n, p_z, intravergent, total) in TABLE_ROWS.items():
            emb = symmetrize(twist_quarter_unified(TwistSpec(k, rho, D)))
            assert validate_embedding(emb).valid
            counts = triple_count(emb)
            assert counts.p_z == p_z
            assert {counts.p_x, counts.p_y} == intravergent
            assert counts.total == total == 8 * n - 10

    def test_verify_report_clean_to_k3(self):
        report = verify_twist_table(3)
        assert report.ok
        assert len(report.rows) == 6

    def test_family_sums_meet_lower_bound(self):
        for (k, rho), (n, _, _, total) in TABLE_ROWS.items():
            assert total >= sim_lower_bound(n)

    def test_trefoil_witness_is_exactly_14(self):
        counts = triple_count(symmetrize(twist_quarter_unified(TwistSpec(1, -1, D))))
        assert counts.total == 14

    def test_rejects_bad_max_k(self):
        with pytest.raises(ValueError):
            verify_twist_table(0)

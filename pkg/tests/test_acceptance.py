"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
pass.  The random-search criteria use a fixed seed and are the slow part
(a few minutes on one core); everything else is near-instant.
"""

import time
from fractions import Fraction

import pytest

from simknot.chords import check_chord_symmetry, chords, shared_endpoints, simultaneous_chords
from simknot.diagram import parity_check, project_and_count, triple_count
from simknot.families import (
    TwistSpec,
    builtin_quarter,
    sim_lower_bound,
    twist_quarter_case,
    twist_quarter_unified,
    verify_twist_table,
)
from simknot.geometry import Axis
from simknot.invariants import (
    fingerprint,
    identify,
    kauffman_bracket,
    name_crossing_number,
    simplify,
)
from simknot.polygon import symmetrize, validate_embedding
from simknot.search import SearchConfig, revalidate_counts, revalidate_entry, run_search
from simknot.standard_diagrams import rational_pd

from oracles import bracket_oracle, goeritz_determinant

DELTAS = (Fraction(1, 5), Fraction(1, 10))

SEARCH_CFG = SearchConfig(
    seed=20260810, samples=10_000, min_interior=1, max_interior=4, coord_bound=3
)


def report(criterion: int, message: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS - {message}")


def embed(quarter):
    emb = symmetrize(quarter)
    assert validate_embedding(emb).valid
    return emb


@pytest.fixture(scope="module")
def family_embeddings():
    out = {"unknot": embed(builtin_quarter("unknot")), "T45": embed(builtin_quarter("T45"))}
    for k in range(1, 10):
        for rho in (1, -1):
            out[f"C({2 * k},{2 * rho})"] = embed(twist_quarter_unified(TwistSpec(k, rho)))
    return out


@pytest.fixture(scope="module")
def search_runs():
    t0 = time.time()
    single = []
    stats = run_search(SEARCH_CFG, single, workers=1)
    t_single = time.time() - t0
    t0 = time.time()
    multi = []
    run_search(SEARCH_CFG, multi, workers=2)
    t_multi = time.time() - t0
    return {
        "single": single,
        "multi": multi,
        "stats": stats,
        "t_single": t_single,
        "t_multi": t_multi,
    }


def test_criterion_1_trivial_knot():
    for delta in DELTAS:
        emb = embed(builtin_quarter("unknot", delta))
        counts = triple_count(emb)
        assert counts.total == 2
        assert sorted(counts[:3]) == [0, 1, 1]
        for axis in (Axis.X, Axis.Y):
            diagram = project_and_count(emb, axis)
            assert diagram.crossing_count == 1
            assert diagram.crossings[0].is_central
    report(1, "trivial knot: counts {0,1,1}, sum 2, both intravergent crossings central")


TABLE1 = {
    (1, -1): (3, 4, {3, 7}, 14),
    (1, 1): (4, 4, {5, 13}, 22),
    (2, -1): (5, 6, {5, 19}, 30),
    (2, 1): (6, 6, {7, 25}, 38),
    (3, -1): (7, 8, {7, 31}, 46),
    (3, 1): (8, 8, {9, 37}, 54),
}


def test_criterion_2_published_table(family_embeddings):
    for (k, rho), (n, p_z, intravergent, total) in TABLE1.items():
        counts = triple_count(family_embeddings[f"C({2 * k},{2 * rho})"])
        assert counts.p_z == p_z, (k, rho)
        assert {counts.p_x, counts.p_y} == intravergent, (k, rho)
        assert counts.total == total == 8 * n - 10, (k, rho)
    report(2, "twist table C(2..6,+-2): sums 14, 22, 30, 38, 46, 54 reproduced exactly")


def test_criterion_3_closed_forms_to_k9():
    t0 = time.time()
    result = verify_twist_table(9)
    elapsed = time.time() - t0
    assert result.ok, result.mismatches
    assert len(result.rows) == 18
    for row in result.rows:
        assert row.counts.total == 8 * row.n - 10
        assert row.counts.p_z == 2 * row.k + 2
        assert 6 * row.n - 11 in (row.counts.p_x, row.counts.p_y)
    assert elapsed < 30
    report(3, f"closed forms and +4/+4/+24 increments verified for k <= 9 in {elapsed:.1f}s")


def test_criterion_4_t45(family_embeddings):
    counts = triple_count(family_embeddings["T45"])
    assert sorted(counts[:3]) == [16, 19, 27]
    assert counts.total == 62
    assert counts.total < 4 * 16
    assert counts.p_z == 16
    report(4, "T(4,5): counts {16,19,27}, sum 62 < 64, transvergent projection has 16")


def test_criterion_5_parity_suite(family_embeddings, search_runs):
    for name, emb in family_embeddings.items():
        for axis in Axis:
            diagram = project_and_count(emb, axis)
            assert parity_check(diagram), (name, axis)
            centrals = len(diagram.central_crossings())
            assert centrals == (0 if axis is Axis.Z else 1), (name, axis)
    trefoil = triple_count(family_embeddings["C(2,-2)"])
    assert trefoil.total == 14
    for (k, rho), (n, _, _, total) in TABLE1.items():
        assert total >= sim_lower_bound(n)

    entries = search_runs["single"]
    assert len(entries) >= 1000, "need at least 1000 accepted random embeddings"
    for entry in entries:
        assert entry.p_z % 2 == 0 and entry.p_x % 2 == 1 and entry.p_y % 2 == 1
        for name in entry.names:
            cr = name_crossing_number(name)
            if cr is not None:
                assert entry.total >= sim_lower_bound(cr), (entry.index, name)
    checked = 0
    for entry in entries[:1000]:
        emb = symmetrize(entry.quarter())
        for axis in Axis:
            diagram = project_and_count(emb, axis)
            assert parity_check(diagram), entry.index
            centrals = len(diagram.central_crossings())
            assert centrals == (0 if axis is Axis.Z else 1), entry.index
        checked += 1
    report(
        5,
        f"parity and Eq-bound hold for 20 family embeddings and {len(entries)} accepted "
        f"random embeddings ({checked} re-projected); trefoil witness sum 14",
    )


def test_criterion_6_fingerprints(family_embeddings):
    for name in ("unknot", "C(2,-2)", "C(2,2)", "C(4,-2)", "C(4,2)", "T45"):
        emb = family_embeddings[name]
        keys = {
            fingerprint(list(project_and_count(emb, axis).pd_code)).key() for axis in Axis
        }
        assert len(keys) == 1, name

    trefoil_code = list(project_and_count(family_embeddings["C(2,-2)"], Axis.Z).pd_code)
    fig8_code = list(project_and_count(family_embeddings["C(2,2)"], Axis.Z).pd_code)
    assert fingerprint(trefoil_code).determinant == goeritz_determinant(rational_pd([3])) == 3
    assert fingerprint(fig8_code).determinant == goeritz_determinant(rational_pd([2, 2])) == 5
    assert identify(fingerprint(trefoil_code)) == ["3_1"]
    assert identify(fingerprint(fig8_code)) == ["4_1"]

    reduced = simplify(trefoil_code)
    assert kauffman_bracket(reduced).coeffs == bracket_oracle(reduced)
    report(
        6,
        "tri-projection fingerprints agree; determinants 3 and 5 match the Goeritz "
        "oracle; simplified trefoil bracket equals the brute-force state sum",
    )


def test_criterion_7_delta_independence():
    results = []
    for delta in DELTAS:
        fixture_counts = [triple_count(embed(builtin_quarter("unknot", delta)))]
        fixture_counts.append(triple_count(embed(builtin_quarter("T45", delta))))
        table = verify_twist_table(9, delta)
        assert table.ok
        fixture_counts.extend(row.counts for row in table.rows)
        results.append(fixture_counts)
    assert results[0] == results[1]
    report(7, "all counts of criteria 1-4 identical for delta = 1/5 and 1/10")


def test_criterion_8_generator_cross_check():
    for k in range(1, 10):
        for rho in (1, -1):
            unified = twist_quarter_unified(TwistSpec(k, rho))
            if rho == 1:
                case, m = (1, (k - 1) // 2) if k % 2 == 1 else (2, k // 2)
            else:
                case, m = (3, (k - 1) // 2) if k % 2 == 1 else (4, k // 2)
            assert unified.vertices == twist_quarter_case(case, m).vertices, (k, rho)
    printed = [
        (0, 2, 0),
        (1, Fraction(-1, 5), -2),
        (2, -3, Fraction(1, 5)),
        (3, -6, 5),
        (-4, -7, 7),
        (-4, 0, 0),
    ]
    quarter = twist_quarter_unified(TwistSpec(1, 1))
    assert [tuple(p) for p in quarter.vertices] == printed
    report(8, "case and unified recipes identical for k <= 9; C(2,2) quarter verbatim")


def test_criterion_9_chord_symmetry(family_embeddings):
    fixtures = ("unknot", "C(2,-2)", "C(2,2)", "C(4,-2)", "C(4,2)", "C(6,-2)", "C(6,2)", "T45")
    for name in fixtures:
        emb = family_embeddings[name]
        for axis in Axis:
            assert check_chord_symmetry(chords(emb, axis), axis), (name, axis)
    sim = simultaneous_chords(family_embeddings["C(2,-2)"])
    assert len(sim.chords) == 14
    coincidences = [
        (a, b) for a, b, _ in shared_endpoints(sim) if Axis.Z in (a.axis, b.axis)
    ]
    assert coincidences
    report(
        9,
        f"chord symmetry holds on {len(fixtures)} fixtures; trefoil simultaneous "
        f"diagram has 14 chords with {len(coincidences)} exact axis-crossing coincidences",
    )


def test_criterion_10_search_determinism(search_runs):
    single = [e.to_line() for e in search_runs["single"]]
    multi = [e.to_line() for e in search_runs["multi"]]
    assert single == multi, "catalog differs between 1 and 2 workers"
    assert len(single) >= 1000

    t0 = time.time()
    for entry in search_runs["single"]:
        assert revalidate_counts(entry), entry.index
    t_reval = time.time() - t0
    for entry in search_runs["single"][:150]:
        assert revalidate_entry(entry), entry.index

    elapsed = search_runs["t_single"] + search_runs["t_multi"] + t_reval
    assert elapsed < 300, f"criterion 10 took {elapsed:.0f}s"
    report(
        10,
        f"10^4-sample catalog byte-identical at 1 and 2 workers ({len(single)} entries); "
        f"all entries re-validate; total {elapsed:.0f}s",
    )

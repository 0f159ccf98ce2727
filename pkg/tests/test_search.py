import itertools

import pytest

from sachs4 import (
    ScaleError,
    VertexEigenvector,
    a4_fast,
    arithmetic_inequality_check,
    closed_form_prediction,
    enumerate_bipartite,
    enumerate_eigenvectors,
    is_difference,
    min_a4_bruteforce,
    min_a4_difference,
    parse_eigenvector,
    solve,
    structural_predicates,
    validate_membership,
    verify_cell,
    verify_range,
)
from sachs4.partition import feasible_edge_range
from sachs4.search import exhaustive_limit


class TestEnumerateBipartite:
    def test_43(self):
        graphs = list(enumerate_bipartite(4, 3))
        assert len(graphs) == 2
        degs = {tuple(sorted(g.degree(v) for v in range(4))) for g in graphs}
        assert degs == {(1, 1, 2, 2), (1, 1, 1, 3)}

    def test_44(self):
        assert len(list(enumerate_bipartite(4, 4))) == 1

    def test_infeasible(self):
        assert list(enumerate_bipartite(5, 7)) == []

    def test_pinned_totals(self):
        # connected bipartite graphs by vertex count: 1, 1, 3, 5, 17, 44
        expected = {2: 1, 3: 1, 4: 3, 5: 5, 6: 17, 7: 44}
        for n, count in expected.items():
            lo, hi = feasible_edge_range(n)
            total = sum(
                len(list(enumerate_bipartite(n, m))) for m in range(lo, hi + 1)
            )
            assert total == count

    def test_members_are_connected_bipartite(self):
        for m in range(6, 13):
            for g in enumerate_bipartite(7, m):
                mem = validate_membership(g)
                assert mem.connected and mem.bipartition is not None
                assert g.m == m and g.n == 7

    def test_no_isomorphic_duplicates_against_networkx(self):
        nx = pytest.importorskip("networkx")
        for m in range(5, 10):
            graphs = list(enumerate_bipartite(6, m))
            nx_graphs = []
            for g in graphs:
                h = nx.Graph()
                h.add_nodes_from(range(g.n))
                h.add_edges_from(g.edges())
                nx_graphs.append(h)
            for g1, g2 in itertools.combinations(nx_graphs, 2):
                assert not nx.is_isomorphic(g1, g2)

    def test_scale_guard(self, monkeypatch):
        monkeypatch.setenv("SACHS_MAX_N", "6")
        with pytest.raises(ScaleError):
            list(enumerate_bipartite(7, 7))
        monkeypatch.setenv("SACHS_MAX_N", "7")
        assert list(enumerate_bipartite(7, 6))
        monkeypatch.delenv("SACHS_MAX_N")
        assert exhaustive_limit() == 10

    def test_deterministic_order(self):
        a = [g.edges() for g in enumerate_bipartite(6, 7)]
        b = [g.edges() for g in enumerate_bipartite(6, 7)]
        assert a == b


class TestBruteForce:
    def test_66(self):
        report = min_a4_bruteforce(6, 6)
        assert report.min_a4 == 4
        evs = {tuple(ev.x) + tuple(ev.y) for ev in report.difference_witnesses}
        assert (2, 2, 1, 1) in evs

    def test_43(self):
        report = min_a4_bruteforce(4, 3)
        assert report.min_a4 == 0
        assert len(report.witnesses) == 1  # the star

    def test_complete_cells_zero(self):
        for n in range(4, 8):
            for t in range(1, n // 2 + 1):
                report = min_a4_bruteforce(n, t * (n - t))
                assert report.min_a4 == 0

    def test_empty_universe(self):
        report = min_a4_bruteforce(5, 7)
        assert report.min_a4 is None and report.witnesses == []


class TestEnumerateEigenvectors:
    def test_66(self):
        evs = set(map(str, enumerate_eigenvectors(6, 6)))
        assert str(parse_eigenvector("2,2;1,1")) in evs
        assert str(parse_eigenvector("1,1,1;1,1,1")) in evs
        assert len(evs) == 2

    def test_44(self):
        evs = list(enumerate_eigenvectors(4, 4))
        assert evs == [VertexEigenvector((2,), (2,))]

    def test_54(self):
        evs = set(map(str, enumerate_eigenvectors(5, 4)))
        assert str(parse_eigenvector("4;1")) in evs
        assert str(parse_eigenvector("1,2;1,1")) in evs

    def test_all_oriented_and_exact(self):
        for m in range(7, 13):
            for ev in enumerate_eigenvectors(8, m):
                assert ev.n == 8 and ev.m == m
                assert ev.is_canonical


class TestDifferenceSearch:
    def test_pinned(self):
        assert min_a4_difference(6, 6).min_a4 == 4
        assert min_a4_difference(7, 8).min_a4 == 6
        assert min_a4_difference(6, 9).min_a4 == 0

    def test_78_witness(self):
        report = min_a4_difference(7, 8)
        assert report.difference_witnesses == [parse_eigenvector("3,2;1,1")]


class TestClosedForm:
    def test_first_case(self):
        rec = closed_form_prediction(6, 6)
        assert rec["paper_case"] == "case1"
        assert rec["paper_value"] == 2
        assert rec["derived_value"] == 4
        assert not rec["printed_eigenvectors_valid"]

    def test_complete(self):
        rec = closed_form_prediction(7, 2 * (7 - 2))
        assert rec["paper_case"] == "complete" and rec["paper_value"] == 0

    def test_boundary(self):
        rec = closed_form_prediction(12, 21)
        assert rec["paper_case"] == "boundary"
        assert rec["paper_eigenvectors"] == ["3,6;2,1", "6,3;1,2"]
        assert rec["derived_eigenvector_values"] == [36, 36]

    def test_case2_cell(self):
        rec = closed_form_prediction(13, 23)
        assert rec["paper_case"] == "case2"
        assert rec["paper_value"] == 2 * (3 * 13 - 9 - 23) * (23 - 2 * 13 + 6)
        # the dense-strip prediction matches the difference-search oracle
        assert solve(13, 23).minimum == rec["paper_value"]

    def test_case4_degenerate_block(self):
        rec = closed_form_prediction(7, 11)
        assert rec["paper_case"] == "case4"
        assert rec["paper_eigenvectors"] == ["3,1,0;1,1,1"]
        assert rec["derived_eigenvectors"] == ["3,1;2,1"]
        assert rec["derived_eigenvector_values"] == [6]
        assert solve(7, 11).minimum == 6

    def test_no_case(self):
        assert closed_form_prediction(5, 5)["paper_case"] is None
        assert closed_form_prediction(8, 16)["paper_case"] is None

    def test_strip_matches_oracle_through_nine(self):
        for n in (7, 8, 9):
            for m in range(2 * (n - 2) + 1, 3 * (n - 3)):
                rec = closed_form_prediction(n, m)
                assert rec["paper_case"] in {"case2", "boundary", "case3", "case4"}
                assert rec["paper_value"] == solve(n, m).minimum
                for val in rec["derived_eigenvector_values"]:
                    assert val == rec["paper_value"]


class TestStructuralPredicates:
    def test_examples(self):
        flags = structural_predicates(parse_eigenvector("2,2;1,1"))
        assert flags.x1_gt_y1 and flags.x1_ge_y1_plus_y2

        flags = structural_predicates(parse_eigenvector("3;2"))
        assert flags.x1_gt_y1 and flags.x1_ge_y1_plus_y2  # vacuous

        flags = structural_predicates(parse_eigenvector("1,1,1;1,1,1"))
        assert not flags.x1_gt_y1


class TestVerify:
    def test_cell_66(self):
        cell = verify_cell(6, 6, "all")
        assert cell["modes"] == {"brute": 4, "difference": 4, "partition": 4}
        assert cell["paper_value"] == 2 and cell["discrepancy"]
        assert cell["modes_agree"] and cell["contains_difference_witness"]
        assert cell["timing_ms"] is None

    def test_cell_68(self):
        cell = verify_cell(6, 8, "all")
        assert cell["paper_case"] == "complete" and not cell["discrepancy"]
        assert cell["min_a4"] == 0
        assert cell["uniqueness_claimed"] and cell["uniqueness_ok"]

    def test_difference_only_mode(self):
        cell = verify_cell(12, 14, "difference")
        assert cell["modes"].keys() == {"difference"}
        assert cell["min_a4"] == solve(12, 14).minimum

    def test_range_jobs_identical(self):
        seq = verify_range(5, 6, "all", jobs=1)
        par = verify_range(5, 6, "all", jobs=3)
        assert seq.to_json() == par.to_json()

    def test_range_flags_known_cells(self):
        result = verify_range(6, 7, "all", jobs=1)
        flagged = {(c["n"], c["m"]) for c in result.cells if c["discrepancy"]}
        assert (6, 6) in flagged and (7, 8) in flagged
        assert result.discrepancies > 0

    def test_brute_guard(self):
        with pytest.raises(ScaleError):
            verify_range(11, 11, "all")
        # difference-only mode has no such cap
        result = verify_range(11, 11, "difference", jobs=1)
        assert result.cells


class TestArithmeticCheck:
    def test_holds_through_thirty(self):
        result = arithmetic_inequality_check(30)
        assert result["holds"] and result["cases_checked"] > 0
        assert result["counterexamples"] == []

    def test_vacuous_for_small_n(self):
        # n = 7 allows no integer y strictly between 2 and (m+1-n)/2
        result = arithmetic_inequality_check(7)
        assert result["cases_checked"] == 0


class TestWitnessClassification:
    def test_every_witness_is_difference_through_seven(self):
        for n in range(5, 8):
            lo, hi = feasible_edge_range(n)
            for m in range(lo, hi + 1):
                report = min_a4_bruteforce(n, m)
                assert report.nondifference_witnesses == 0
                for g in report.witnesses:
                    assert is_difference(g)

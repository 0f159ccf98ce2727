import pytest

from sachs4 import (
    a4_by_row_sums,
    YoungMatrix,
    conjugate,
    enumerate_eigenvectors,
    enumerate_feasible,
    eigenvector_from_rows,
    min_a4_difference,
    objective,
    realize,
    a4_fast,
    solve,
    young_matrix,
)
from sachs4.partition import feasible_edge_range


class TestObjective:
    def test_pinned(self):
        assert objective((2, 2, 1, 1)) == 4
        assert objective((3, 2, 1)) == 5
        assert objective((5, 5, 5)) == 0

    def test_matches_row_sum_formula(self):
        for rows in [(4, 3, 3, 1), (2, 1, 1, 1), (6, 2), (3, 3, 2, 2, 1)]:
            assert objective(rows) == a4_by_row_sums(YoungMatrix(rows))

    def test_matches_graph_oracle(self):
        for n in range(2, 13):
            lo, hi = feasible_edge_range(n)
            for m in range(lo, hi + 1):
                for rows in enumerate_feasible(n, m):
                    ev = eigenvector_from_rows(YoungMatrix(rows))
                    if ev.n <= 14:
                        assert objective(rows) == a4_fast(realize(ev))

    def test_validation(self):
        with pytest.raises(ValueError):
            objective((1, 2))


class TestEnumerateFeasible:
    def test_66(self):
        assert set(enumerate_feasible(6, 6)) == {(2, 2, 1, 1), (3, 2, 1)}

    def test_69(self):
        assert list(enumerate_feasible(6, 9)) == [(3, 3, 3)]

    def test_78(self):
        assert set(enumerate_feasible(7, 8)) == {
            (2, 2, 2, 1, 1),
            (3, 2, 2, 1),
            (3, 3, 1, 1),
        }

    def test_infeasible_empty(self):
        assert list(enumerate_feasible(5, 7)) == []
        assert list(enumerate_feasible(5, 3)) == []

    def test_descending_order(self):
        out = list(enumerate_feasible(8, 10))
        assert out == sorted(out, reverse=True)

    def test_h_plus_width_is_n(self):
        for n in range(2, 12):
            lo, hi = feasible_edge_range(n)
            for m in range(lo, hi + 1):
                for rows in enumerate_feasible(n, m):
                    assert len(rows) + rows[0] == n
                    assert sum(rows) == m
                    assert len(rows) >= (n + 1) // 2

    def test_bijection_with_eigenvectors(self):
        for n in range(2, 13):
            lo, hi = feasible_edge_range(n)
            for m in range(lo, hi + 1):
                rows_set = set(enumerate_feasible(n, m))
                ev_rows = {
                    young_matrix(ev).rows for ev in enumerate_eigenvectors(n, m)
                }
                assert rows_set == ev_rows

    def test_rectangle_feasible_iff_product_splits(self):
        for n in range(4, 11):
            for h in range((n + 1) // 2, n):
                r1 = n - h
                rect = (r1,) * h
                feasible = set(enumerate_feasible(n, h * r1))
                assert rect in feasible
                assert objective(rect) == 0


class TestSolve:
    def test_66(self):
        res = solve(6, 6)
        assert res.minimum == 4 and res.argmin == ((2, 2, 1, 1),)

    def test_78(self):
        res = solve(7, 8)
        assert res.minimum == 6 and res.argmin == ((2, 2, 2, 1, 1),)

    def test_rectangle(self):
        assert solve(6, 9).minimum == 0

    def test_infeasible(self):
        res = solve(5, 7)
        assert res.minimum is None and res.argmin == ()

    def test_equals_difference_minimum(self):
        for n in range(2, 13):
            lo, hi = feasible_edge_range(n)
            for m in range(lo, hi + 1):
                assert solve(n, m).minimum == min_a4_difference(n, m).min_a4


def test_conjugate():
    assert conjugate((3, 3, 1)) == (3, 2, 2)
    assert conjugate((3, 2, 2)) == (3, 3, 1)
    assert conjugate((4,)) == (1, 1, 1, 1)

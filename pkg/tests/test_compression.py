import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sachs4 import (
    YoungMatrix,
    a4_by_row_sums,
    audit_corner_monotonicity,
    audit_vertex_compression,
    compress,
    corner_matching_count,
    corner_matching_count_direct,
    corner_sets,
    from_edges,
    iter_canonical_eigenvectors,
    neighbor_split,
    validate_membership,
    young_compress,
    young_matrix,
)
from sachs4.corpus import random_connected_bipartite


class TestNeighborSplit:
    def test_p5(self, path5):
        split = neighbor_split(path5, 1, 3)
        assert split.common == (2,)
        assert split.u_only == (0,)
        assert split.v_only == (4,)

    def test_duplicates(self, k23):
        split = neighbor_split(k23, 0, 1)
        assert split.u_only == () and split.v_only == ()

    def test_k2(self):
        g = from_edges(2, [(0, 1)])
        split = neighbor_split(g, 0, 1)
        assert split == type(split)((), (), ())

    def test_errors(self, path4):
        with pytest.raises(ValueError):
            neighbor_split(path4, 1, 1)
        with pytest.raises(ValueError):
            neighbor_split(path4, 0, 9)


class TestCompress:
    def test_p5(self, path5):
        h = compress(path5, 1, 3)
        assert sorted(h.edges()) == [(0, 3), (1, 2), (2, 3), (3, 4)]

    def test_duplicates_identity(self, k23):
        assert compress(k23, 0, 1) == k23

    def test_c6(self, cycle6):
        h = compress(cycle6, 0, 2)
        assert h.m == cycle6.m
        from sachs4 import a4_fast

        assert a4_fast(cycle6) == 9 and a4_fast(h) == 6

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10_000), st.data())
    def test_preserves_counts_and_bipartiteness(self, seed, data):
        rng = random.Random(seed)
        g = random_connected_bipartite(rng, n_min=4, n_max=10)
        u = data.draw(st.integers(0, g.n - 1))
        v = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != u))
        h = compress(g, u, v)
        assert h.n == g.n and h.m == g.m
        assert validate_membership(h).bipartition is not None


class TestVertexCompressionAudit:
    def test_p5(self, path5):
        report = audit_vertex_compression(path5, 1, 3, 2)
        row = report["matchings"][0]
        assert (row["before"], row["after"]) == (3, 2) and row["ok"]
        assert report["violations"] == 0

    def test_duplicates_equalities(self, k23):
        report = audit_vertex_compression(k23, 0, 1, 4)
        assert all(r["before"] == r["after"] for r in report["matchings"])
        assert report["violations"] == 0 and not report["changed"]

    def test_c6(self, cycle6):
        report = audit_vertex_compression(cycle6, 0, 2, 2)
        assert report["a4"] == {"before": 9, "after": 6, "applicable": True, "ok": True}
        assert report["distance"] == 2 and report["violations"] == 0


class TestCornerSets:
    def test_311(self):
        cs = corner_sets(YoungMatrix((3, 1, 1)))
        assert cs.out_corners == ((1, 3), (3, 1))
        assert cs.in_corners == ((2, 2),)

    def test_2211(self):
        cs = corner_sets(YoungMatrix((2, 2, 1, 1)))
        assert cs.out_corners == ((2, 2), (4, 1))
        assert cs.in_corners == ((3, 2),)

    def test_rectangle(self):
        cs = corner_sets(YoungMatrix((4, 4, 4)))
        assert cs.out_corners == ((3, 4),)
        assert cs.in_corners == ()


class TestYoungCompress:
    def test_311(self):
        assert young_compress(YoungMatrix((3, 1, 1)), (1, 3), (2, 2)).rows == (2, 2, 1)

    def test_adjacent_rejected(self):
        with pytest.raises(ValueError, match="adjacent"):
            young_compress(YoungMatrix((2, 2, 1, 1)), (2, 2), (3, 2))

    def test_421(self):
        assert young_compress(YoungMatrix((4, 2, 1)), (1, 4), (3, 2)).rows == (3, 2, 2)

    def test_not_a_corner(self):
        with pytest.raises(ValueError, match="out-corner"):
            young_compress(YoungMatrix((3, 1, 1)), (1, 1), (2, 2))
        with pytest.raises(ValueError, match="in-corner"):
            young_compress(YoungMatrix((3, 1, 1)), (1, 3), (3, 3))

    def test_preserves_cell_count_and_validity(self):
        for n in range(2, 11):
            for ev in iter_canonical_eigenvectors(n):
                y = young_matrix(ev)
                cs = corner_sets(y)
                for out in cs.out_corners:
                    for inn in cs.in_corners:
                        if abs(out[0] - inn[0]) + abs(out[1] - inn[1]) == 1:
                            continue
                        y2 = young_compress(y, out, inn)
                        assert y2.s == y.s


class TestCornerMatchingCount:
    def test_pinned(self):
        assert corner_matching_count(YoungMatrix((3, 1, 1)), (1, 3)) == 2
        assert corner_matching_count(YoungMatrix((2, 2, 1, 1)), (2, 2)) == 2
        assert corner_matching_count(YoungMatrix((1,)), (1, 1)) == 0

    def test_not_a_corner(self):
        with pytest.raises(ValueError, match="out-corner"):
            corner_matching_count(YoungMatrix((3, 1, 1)), (2, 1))

    def test_direct_enumeration_to_eight(self):
        for n in range(2, 9):
            for ev in iter_canonical_eigenvectors(n):
                y = young_matrix(ev)
                for corner in corner_sets(y).out_corners:
                    assert corner_matching_count(y, corner) == \
                        corner_matching_count_direct(y, corner)


class TestCornerAudit:
    def test_small_run(self):
        audit = audit_corner_monotonicity(6)
        assert audit["move_count"] == len(audit["moves"]) > 0
        assert audit["forward_holds"]

    def test_contains_flagship_move(self):
        audit = audit_corner_monotonicity(6)
        target = [
            mv
            for mv in audit["moves"]
            if mv["instance"] == [3, 1, 1] and mv["move"] == {"out": [1, 3], "in": [2, 2]}
        ]
        assert len(target) == 1
        assert target[0]["a4_before"] == 4 and target[0]["a4_after"] == 2
        assert target[0]["ij"] == 3 and target[0]["pq"] == 4

    def test_rectangles_contribute_nothing(self):
        audit = audit_corner_monotonicity(4)
        for mv in audit["moves"]:
            assert mv["instance"] != [2, 2]

    def test_scale_guard(self):
        with pytest.raises(Exception):
            audit_corner_monotonicity(13)

"""Two compression operators and their empirical audits.

Vertex compression G_{u->v} rewires every edge between u and its private
neighbors onto v; it preserves the edge count and never increases any
matching count. Corner compression moves one staircase cell of a Young
matrix from an out-corner to a non-adjacent in-corner. The audits record
before/after data and verdicts instead of asserting the claimed
monotonicity, so a counterexample is report content rather than a crash.
"""

from dataclasses import dataclass

from .errors import ScaleError
from .difference import (
    YoungMatrix,
    a4_by_row_sums,
    eigenvector_from_rows,
    iter_canonical_eigenvectors,
    realize,
    young_matrix,
)
from .graph import (
    Graph,
    a4_fast,
    distance,
    iter_bits,
    matching_counts,
    quadrangles,
    validate_membership,
)


@dataclass(frozen=True)
class NeighborSplit:
    """Common and private neighbors of an ordered vertex pair."""

    common: tuple[int, ...]
    u_only: tuple[int, ...]
    v_only: tuple[int, ...]


def neighbor_split(g: Graph, u: int, v: int) -> NeighborSplit:
    if u == v:
        raise ValueError("neighbor split needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex id out of range")
    exclude = ~((1 << u) | (1 << v))
    nu = g.adjacency[u] & exclude
    nv = g.adjacency[v] & exclude
    return NeighborSplit(
        common=tuple(iter_bits(nu & nv)),
        u_only=tuple(iter_bits(nu & ~nv)),
        v_only=tuple(iter_bits(nv & ~nu)),
    )


def compress(g: Graph, u: int, v: int) -> Graph:
    """Move all edges between u and its private neighbors over to v.

    Same vertex and edge counts as g; equals g exactly when u has no private
    neighbor. A u-v edge, when present, is untouched.
    """
    split = neighbor_split(g, u, v)
    if not split.u_only:
        return g
    rows = list(g.adjacency)
    for w in split.u_only:
        rows[u] &= ~(1 << w)
        rows[w] &= ~(1 << u)
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    return Graph(g.n, tuple(rows))


def audit_vertex_compression(g: Graph, u: int, v: int, k_max: int = 4) -> dict:
    """Before/after matching counts and a4 for one compression, with verdicts.

    Monotonicity of m_k is checked for 2 <= k <= k_max; the a4 inequality is
    only claimed (hence only flagged) when dis(u, v) >= 2. When either private
    neighborhood is empty the compression is an isomorphism or the identity,
    so every count must be unchanged; that too is flagged, never assumed.
    """
    split = neighbor_split(g, u, v)
    h = compress(g, u, v)
    before = matching_counts(g, k_max)
    after = matching_counts(h, k_max)
    dis = distance(g, u, v)
    expected_equal = not split.u_only or not split.v_only

    matchings = []
    violations = 0
    for k in range(2, k_max + 1):
        ok = before[k] >= after[k]
        if expected_equal:
            ok = ok and before[k] == after[k]
        if not ok:
            violations += 1
        matchings.append(
            {"k": k, "before": before[k], "after": after[k], "ok": ok}
        )

    a4_before = a4_fast(g)
    a4_after = a4_fast(h)
    a4_applicable = dis is not None and dis >= 2
    a4_ok = (not a4_applicable) or a4_before >= a4_after
    if not a4_ok:
        violations += 1

    return {
        "n": g.n,
        "m": g.m,
        "u": u,
        "v": v,
        "distance": dis,
        "split": {
            "common": list(split.common),
            "u_only": list(split.u_only),
            "v_only": list(split.v_only),
        },
        "changed": h != g,
        "connected_after": validate_membership(h).connected,
        "matchings": matchings,
        "a4": {
            "before": a4_before,
            "after": a4_after,
            "applicable": a4_applicable,
            "ok": a4_ok,
        },
        "violations": violations,
    }


@dataclass(frozen=True)
class CornerSet:
    """Removable 1-cells and fillable 0-cells of a staircase, 1-based."""

    out_corners: tuple[tuple[int, int], ...]
    in_corners: tuple[tuple[int, int], ...]


def corner_sets(y: YoungMatrix) -> CornerSet:
    """Out-corner: 1-cell with 0 below and to the right. In-corner: 0-cell
    with 1 above and to the left. Out-of-range cells read as 0, so the first
    row and first column never contain in-corners."""
    outs = []
    ins = []
    for i in range(1, y.h + 2):
        for j in range(1, y.width + 2):
            if y.cell(i, j) == 1 and y.cell(i + 1, j) == 0 and y.cell(i, j + 1) == 0:
                outs.append((i, j))
            if y.cell(i, j) == 0 and y.cell(i - 1, j) == 1 and y.cell(i, j - 1) == 1:
                ins.append((i, j))
    return CornerSet(out_corners=tuple(outs), in_corners=tuple(ins))


def young_compress(y: YoungMatrix, out: tuple[int, int], inn: tuple[int, int]) -> YoungMatrix:
    """Move the staircase cell at the out-corner to the in-corner.

    The two positions must not be grid-adjacent (the degenerate slide along
    one row or column reproduces the same row-sum multiset). Rows are
    re-sorted and an emptied row is dropped, so the result is again a valid
    staircase with the same cell count.
    """
    cs = corner_sets(y)
    if out not in cs.out_corners:
        raise ValueError(f"{out} is not an out-corner")
    if inn not in cs.in_corners:
        raise ValueError(f"{inn} is not an in-corner")
    if abs(out[0] - inn[0]) + abs(out[1] - inn[1]) == 1:
        raise ValueError(f"positions {out} and {inn} are adjacent")
    rows = list(y.rows)
    rows[out[0] - 1] -= 1
    rows[inn[0] - 1] += 1  # in-corners never sit below the last row
    rows = [r for r in rows if r]
    rows.sort(reverse=True)
    result = YoungMatrix(tuple(rows))
    if result.s != y.s:
        raise RuntimeError("internal: corner move changed the cell count")
    return result


def corner_matching_count(y: YoungMatrix, out: tuple[int, int]) -> int:
    """Number of 2-matchings through the out-corner edge that lie in no
    quadrangle: total cells minus the full rectangle above-left of the corner."""
    cs = corner_sets(y)
    if out not in cs.out_corners:
        raise ValueError(f"{out} is not an out-corner")
    return y.s - out[0] * out[1]


def corner_matching_count_direct(y: YoungMatrix, out: tuple[int, int]) -> int:
    """Independent oracle for corner_matching_count, by pair enumeration on
    the realized graph."""
    cs = corner_sets(y)
    if out not in cs.out_corners:
        raise ValueError(f"{out} is not an out-corner")
    ev = eigenvector_from_rows(y)
    g = realize(ev)
    sx = sum(ev.x)
    e = (out[0] - 1, sx + out[1] - 1)
    quads = {frozenset(q) for q in quadrangles(g)}
    count = 0
    for u, v in g.edges():
        if u == e[0] and v == e[1]:
            continue
        if len({u, v, e[0], e[1]}) != 4:
            continue
        if frozenset((u, v, e[0], e[1])) not in quads:
            count += 1
    return count


def _legal_moves(y: YoungMatrix):
    cs = corner_sets(y)
    for out in cs.out_corners:
        for inn in cs.in_corners:
            if abs(out[0] - inn[0]) + abs(out[1] - inn[1]) == 1:
                continue
            yield out, inn


def audit_corner_monotonicity(n_max: int, check_sequences: bool = True) -> dict:
    """Exhaustive audit of corner-compression moves on all difference graphs
    with at most n_max vertices.

    The claim under audit: moving a cell from out-corner (i, j) to in-corner
    (p, q) never increases a4 iff i*j <= p*q. (Statements of this claim
    sometimes write b4; it is read as the fourth adjacency coefficient a4.)
    Each legal move is recorded with both products and both a4 values plus
    per-direction verdicts; two-step move sequences are additionally checked
    against the summed-products comparison. Nothing is asserted here; the
    verdict fields carry the outcome.
    """
    if n_max > 12:
        raise ScaleError("corner audit is bounded at n_max <= 12")
    moves = []
    forward_cex = []
    converse_cex = []
    seq_checked = 0
    seq_violations = []
    for n in range(2, n_max + 1):
        for ev in iter_canonical_eigenvectors(n):
            y = young_matrix(ev)
            a4_before = a4_by_row_sums(y)
            for out, inn in _legal_moves(y):
                y2 = young_compress(y, out, inn)
                a4_after = a4_by_row_sums(y2)
                ij = out[0] * out[1]
                pq = inn[0] * inn[1]
                forward_ok = (ij > pq) or (a4_before >= a4_after)
                converse_ok = (a4_before < a4_after) or (ij <= pq)
                record = {
                    "instance": list(y.rows),
                    "move": {"out": list(out), "in": list(inn)},
                    "ij": ij,
                    "pq": pq,
                    "a4_before": a4_before,
                    "a4_after": a4_after,
                    "rows_after": list(y2.rows),
                    "forward_ok": forward_ok,
                    "converse_ok": converse_ok,
                }
                moves.append(record)
                if not forward_ok:
                    forward_cex.append(record)
                if not converse_ok:
                    converse_cex.append(record)
                if check_sequences:
                    for out2, inn2 in _legal_moves(y2):
                        y3 = young_compress(y2, out2, inn2)
                        seq_checked += 1
                        outs = ij + out2[0] * out2[1]
                        ins = pq + inn2[0] * inn2[1]
                        if outs > ins and not a4_before > a4_by_row_sums(y3):
                            seq_violations.append(
                                {
                                    "instance": list(y.rows),
                                    "moves": [
                                        {"out": list(out), "in": list(inn)},
                                        {"out": list(out2), "in": list(inn2)},
                                    ],
                                    "a4_start": a4_before,
                                    "a4_end": a4_by_row_sums(y3),
                                }
                            )
    return {
        "header": (
            "corner-compression audit; the monotonicity conclusion is read on "
            "the fourth adjacency coefficient a4"
        ),
        "n_max": n_max,
        "moves": moves,
        "move_count": len(moves),
        "forward_holds": not forward_cex,
        "converse_holds": not converse_cex,
        "forward_counterexamples": forward_cex,
        "converse_counterexamples": converse_cex,
        "sequences_checked": seq_checked,
        "sequence_violations": seq_violations,
    }

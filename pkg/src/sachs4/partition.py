"""Constrained integer-partition form of the minimization.

A connected difference graph on n vertices with m edges, oriented with the
larger side as rows, has a staircase whose row-sum vector r satisfies
h + r_1 = n (first row full, column count r_1), h >= ceil(n/2) and
sum r_i = m. Minimizing the fourth coefficient is then an exact search over
these non-increasing positive vectors. No closed form is known; the solver
enumerates.
"""

from dataclasses import dataclass

from .difference import YoungMatrix, eigenvector_from_rows


def objective(rows) -> int:
    """sum over i<j of (r_i - r_{i+1}) * i * r_j, exactly."""
    r = tuple(rows)
    YoungMatrix(r)  # validates shape
    h = len(r)
    total = 0
    suffix = sum(r)
    for i in range(1, h):
        suffix -= r[i - 1]
        total += (r[i - 1] - r[i]) * i * suffix
    return total


def conjugate(rows) -> tuple[int, ...]:
    """Column sums of the staircase (the transposed partition)."""
    return YoungMatrix(tuple(rows)).column_sums()


def feasible_edge_range(n: int) -> tuple[int, int]:
    """Edge counts for which connected bipartite n-vertex graphs exist."""
    return n - 1, (n // 2) * ((n + 1) // 2)


def _partitions_first_fixed(total: int, slots: int, cap: int):
    # non-increasing positive vectors, exactly `slots` parts, parts <= cap
    if slots == 0:
        if total == 0:
            yield ()
        return
    lo = -(-total // slots)  # ceil: smallest feasible leading part
    for v in range(min(cap, total - slots + 1), lo - 1, -1):
        for rest in _partitions_first_fixed(total - v, slots - 1, v):
            yield (v,) + rest


def enumerate_feasible(n: int, m: int):
    """Feasible row-sum vectors for (n, m), lexicographically descending.

    When n is even and h = r_1 = n/2 a vector and its conjugate describe the
    same graph seen from either side; only the canonical orientation is kept
    so the stream is in bijection with the oriented eigenvectors.
    """
    lo, hi = feasible_edge_range(n)
    if n < 2 or not lo <= m <= hi:
        return
    found = []
    for h in range((n + 1) // 2, n):
        r1 = n - h
        if r1 < 1 or m < h or m > h * r1:
            continue
        for rest in _partitions_first_fixed(m - r1, h - 1, r1):
            rows = (r1,) + rest
            if 2 * h == n and not eigenvector_from_rows(YoungMatrix(rows)).is_canonical:
                continue
            found.append(rows)
    found.sort(reverse=True)
    yield from found


@dataclass(frozen=True)
class SolveResult:
    minimum: int | None
    argmin: tuple[tuple[int, ...], ...]
    feasible_count: int


def solve(n: int, m: int) -> SolveResult:
    """Exact minimum of the objective over the feasible vectors, with every
    minimizer; empty status when (n, m) is infeasible."""
    best = None
    argmin: list[tuple[int, ...]] = []
    count = 0
    for rows in enumerate_feasible(n, m):
        count += 1
        val = objective(rows)
        if best is None or val < best:
            best = val
            argmin = [rows]
        elif val == best:
            argmin.append(rows)
    return SolveResult(minimum=best, argmin=tuple(argmin), feasible_count=count)

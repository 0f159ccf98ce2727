"""Difference-graph (chain-graph) calculus.

A connected bipartite graph is a difference graph when the neighborhoods on
one side are linearly ordered by inclusion; equivalently it has no induced
path on five vertices. Such a graph is determined by its block-size pair
(x_1..x_k; y_1..y_k): the i-th x-block is completely joined to y-blocks
1..k-i+1. This module implements the representations (block eigenvector,
staircase Young matrix, characteristic matrix) and three structurally
different formulas for the fourth adjacency coefficient.
"""

import itertools
from dataclasses import dataclass

from .errors import ScaleError
from .graph import Graph, iter_bits, validate_membership


@dataclass(frozen=True)
class VertexEigenvector:
    """Block sizes (x_1..x_k; y_1..y_k) of a difference graph, all positive."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.x) != len(self.y) or not self.x:
            raise ValueError("x and y need equal positive length")
        if any(v < 1 for v in self.x) or any(v < 1 for v in self.y):
            raise ValueError("block sizes must be positive")

    @property
    def character(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return sum(self.x) + sum(self.y)

    @property
    def m(self) -> int:
        k = self.character
        return sum(
            self.x[i] * self.y[j]
            for i in range(k)
            for j in range(k - i)
        )

    def swap(self) -> "VertexEigenvector":
        return VertexEigenvector(self.y, self.x)

    @property
    def is_canonical(self) -> bool:
        """Oriented with the larger side first; ties broken lexicographically."""
        sx, sy = sum(self.x), sum(self.y)
        return sx > sy or (sx == sy and self.x >= self.y)

    def canonical(self) -> "VertexEigenvector":
        return self if self.is_canonical else self.swap()


def parse_eigenvector(text: str) -> VertexEigenvector:
    """Parse "x1,x2,...;y1,y2,..." into an eigenvector."""
    parts = text.split(";")
    if len(parts) != 2:
        raise ValueError("eigenvector text needs exactly one semicolon")
    try:
        x = tuple(int(t) for t in parts[0].split(","))
        y = tuple(int(t) for t in parts[1].split(","))
    except ValueError:
        raise ValueError(f"malformed eigenvector text {text!r}") from None
    return VertexEigenvector(x, y)


def format_eigenvector(ev: VertexEigenvector) -> str:
    return ",".join(map(str, ev.x)) + ";" + ",".join(map(str, ev.y))


@dataclass(frozen=True)
class YoungMatrix:
    """Left-justified 0/1 staircase, stored by its non-increasing row sums."""

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("staircase needs at least one row")
        if any(r < 1 for r in self.rows):
            raise ValueError("row sums must be positive")
        if any(self.rows[i] < self.rows[i + 1] for i in range(len(self.rows) - 1)):
            raise ValueError("row sums must be non-increasing")

    @property
    def h(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0]

    @property
    def s(self) -> int:
        return sum(self.rows)

    def cell(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j); out of range reads as 0."""
        if 1 <= i <= self.h and 1 <= j <= self.rows[i - 1]:
            return 1
        return 0

    def column_sums(self) -> tuple[int, ...]:
        out = [0] * self.width
        for r in self.rows:
            for j in range(r):
                out[j] += 1
        return tuple(out)


def parse_rows(text: str) -> YoungMatrix:
    try:
        rows = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed row-sum text {text!r}") from None
    return YoungMatrix(rows)


def format_rows(y: YoungMatrix) -> str:
    return ",".join(map(str, y.rows))


@dataclass(frozen=True)
class CharacteristicMatrixT:
    """k x k products matrix: entry (i, j) is x_i*y_j on the anti-triangle."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.entries)


def is_difference(g: Graph) -> bool:
    """Chain test: neighborhoods on one side linearly ordered by inclusion."""
    mem = validate_membership(g)
    if not mem.connected or mem.bipartition is None:
        raise ValueError("difference test is defined for connected bipartite graphs")
    side = mem.bipartition[0]
    hoods = sorted((g.adjacency[v] for v in side), key=int.bit_count, reverse=True)
    for big, small in zip(hoods, hoods[1:]):
        if big | small != big:
            return False
    return True


def has_induced_p5(g: Graph) -> bool:
    """Induced 5-vertex path detector, by direct enumeration."""
    adj = g.adjacency
    n = g.n
    for b, c, d in itertools.permutations(range(n), 3):
        if not ((adj[b] >> c) & 1 and (adj[c] >> d) & 1) or (adj[b] >> d) & 1:
            continue
        ends_a = adj[b] & ~adj[c] & ~adj[d] & ~(1 << c) & ~(1 << d)
        ends_e = adj[d] & ~adj[c] & ~adj[b] & ~(1 << b) & ~(1 << c)
        for a in iter_bits(ends_a):
            rest = ends_e & ~(1 << a) & ~adj[a]
            if rest:
                return True
    return False


def eigenvector_of(g: Graph) -> VertexEigenvector:
    """Block-size pair of a difference graph, canonically oriented."""
    mem = validate_membership(g)
    if not mem.connected or mem.bipartition is None:
        raise ValueError("eigenvector is defined for connected bipartite graphs")
    if not is_difference(g):
        raise ValueError("not a difference graph")

    def block_sizes(side):
        groups: dict[int, int] = {}
        for v in side:
            groups[g.adjacency[v]] = groups.get(g.adjacency[v], 0) + 1
        ordered = sorted(groups.items(), key=lambda kv: kv[0].bit_count(), reverse=True)
        return tuple(cnt for _, cnt in ordered)

    xa = block_sizes(mem.bipartition[0])
    yb = block_sizes(mem.bipartition[1])
    if len(xa) != len(yb):
        raise RuntimeError("internal: duplicate-block counts differ between parts")
    ev = VertexEigenvector(xa, yb).canonical()
    if ev.n != g.n or ev.m != g.m:
        raise RuntimeError("internal: block structure disagrees with the graph")
    return ev


def realize(ev: VertexEigenvector) -> Graph:
    """Graph on n(ev) vertices: x-blocks first, then y-blocks; x-block i is
    completely joined to y-blocks 1..k-i+1."""
    if ev.n > 64:
        raise ScaleError("realized graph would exceed the 64-vertex bound")
    k = ev.character
    sx = sum(ev.x)
    x_start = list(itertools.accumulate((0,) + ev.x))
    y_start = list(itertools.accumulate((0,) + ev.y))
    rows = [0] * ev.n
    for i in range(k):
        ymask = 0
        for j in range(k - i):
            for t in range(y_start[j], y_start[j + 1]):
                ymask |= 1 << (sx + t)
        for u in range(x_start[i], x_start[i + 1]):
            rows[u] = ymask
    for u in range(sx):
        for v in iter_bits(rows[u]):
            rows[v] |= 1 << u
    return Graph(ev.n, tuple(rows))


def young_matrix(ev: VertexEigenvector) -> YoungMatrix:
    """Staircase of the x-side: one row per x vertex, block i rows summing to
    y_1 + ... + y_{k-i+1}. Orient the eigenvector first if the h + r_1 = n
    bookkeeping matters."""
    k = ev.character
    rows = []
    for i in range(k):
        rows.extend([sum(ev.y[: k - i])] * ev.x[i])
    return YoungMatrix(tuple(rows))


def eigenvector_from_rows(y: YoungMatrix) -> VertexEigenvector:
    """Inverse of young_matrix: distinct row values give blocks."""
    values = []
    mults = []
    for r in y.rows:
        if values and values[-1] == r:
            mults[-1] += 1
        else:
            values.append(r)
            mults.append(1)
    k = len(values)
    ys = [0] * k
    for i in range(k):
        nxt = values[i + 1] if i + 1 < k else 0
        ys[k - i - 1] = values[i] - nxt
    return VertexEigenvector(tuple(mults), tuple(ys))


def characteristic_matrix(ev: VertexEigenvector) -> CharacteristicMatrixT:
    """Products x_i*y_j where i + j <= k + 1 (1-based), zero below."""
    k = ev.character
    entries = tuple(
        tuple(ev.x[i] * ev.y[j] if i + j <= k - 1 else 0 for j in range(k))
        for i in range(k)
    )
    return CharacteristicMatrixT(entries)


def difference_complement(ev: VertexEigenvector, i: int) -> VertexEigenvector:
    """Blocks remaining after deleting x-blocks 1..i and y-block k-i+1:
    (x_{i+1}..x_k; y_1..y_{k-i}), a difference graph of character k-i."""
    k = ev.character
    if not 1 <= i <= k - 1:
        raise ValueError(f"complement index must be in 1..{k - 1}")
    return VertexEigenvector(ev.x[i:], ev.y[: k - i])


def a4_by_blocks(ev: VertexEigenvector) -> int:
    """Fourth coefficient as a sum of edge-count products.

    Term i pairs the complete block between x-blocks 1..i and y-block k-i+1
    with the edge count of the complementary difference graph; each such pair
    of edges is a 2-matching lying in no quadrangle, and those are exactly
    what a4 counts on a bipartite graph.
    """
    k = ev.character
    total = 0
    prefix = 0
    for i in range(1, k):
        prefix += ev.x[i - 1]
        total += prefix * ev.y[k - i] * difference_complement(ev, i).m
    return total


def a4_by_char_matrix(ev: VertexEigenvector) -> int:
    """Same quantity from the characteristic matrix: column-sum times
    trailing-submatrix-sum, summed over the anti-diagonal split."""
    t = characteristic_matrix(ev).entries
    k = len(t)
    total = 0
    for i in range(1, k):
        col = k - i  # 0-based index of column k-i+1
        col_sum = sum(t[r][col] for r in range(k))
        sub_sum = sum(t[r][c] for r in range(i, k) for c in range(k - i))
        total += col_sum * sub_sum
    return total


def a4_by_row_sums(y: YoungMatrix) -> int:
    """Same quantity from staircase row sums r_1..r_h:
    sum over i<j of (r_i - r_{i+1}) * i * r_j."""
    r = y.rows
    h = len(r)
    total = 0
    for i in range(1, h):
        step = r[i - 1] - r[i]
        if step:
            total += step * i * sum(r[i:])
    return total


def iter_canonical_eigenvectors(n: int):
    """All canonically oriented eigenvectors with exactly n vertices.

    Order: x-side total ascending, then character, then lexicographic block
    sequences. Intended for small n; the space doubles per vertex.
    """

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for sx in range((n + 1) // 2, n):
        sy = n - sx
        for k in range(1, min(sx, sy) + 1):
            for x in compositions(sx, k):
                for y in compositions(sy, k):
                    ev = VertexEigenvector(x, y)
                    if sx != sy or ev.is_canonical:
                        yield ev

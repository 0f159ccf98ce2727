"""Exact primitives for small simple graphs stored as per-vertex bit masks.

Vertices are 0..n-1 and adjacency row u has bit v set iff uv is an edge.
Every count in this module is exact integer arithmetic; nothing here touches
floating point. The vertex universe is capped at 64 so a row always fits one
machine word in the compiled kernels.
"""

from dataclasses import dataclass, field
from math import comb

from .errors import ScaleError

MAX_VERTICES = 64
# the explicit subgraph-enumeration oracle refuses larger inputs
SACHS_ORACLE_LIMIT = 16


class EdgeListError(ValueError):
    """Malformed, out-of-range, duplicate, or self-loop edge input."""


def iter_bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bit-mask adjacency rows."""

    n: int
    adjacency: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if self.n > MAX_VERTICES:
            raise ScaleError(f"n={self.n} exceeds the {MAX_VERTICES}-vertex bound")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency row count differs from n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adjacency):
            if row & ~full:
                raise ValueError(f"adjacency row {u} references vertices >= n")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in iter_bits(self.adjacency[u]):
                if not (self.adjacency[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(
            self, "m", sum(row.bit_count() for row in self.adjacency) // 2
        )

    def degree(self, u: int) -> int:
        return self.adjacency[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adjacency[u]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adjacency[u] >> (u + 1)
            for off in iter_bits(row):
                out.append((u, u + 1 + off))
        return out


def from_edges(n: int, edges) -> Graph:
    """Build a graph from (u, v) pairs, rejecting loops and duplicates."""
    if n < 1:
        raise EdgeListError("vertex count must be positive")
    if n > MAX_VERTICES:
        raise ScaleError(f"n={n} exceeds the {MAX_VERTICES}-vertex bound")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise EdgeListError(f"self-loop {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge {u} {v} out of range for n={n}")
        if (rows[u] >> v) & 1:
            raise EdgeListError(f"duplicate edge {min(u, v)} {max(u, v)}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def load_graph(text: str) -> Graph:
    """Parse the edge-list format: header "n m", then m lines "u v" with u < v.

    Lines starting with '#' are comments; blank lines are skipped. Duplicate
    edges are rejected rather than merged.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#") or not raw.strip():
            continue
        lines.append((lineno, raw))
    if not lines:
        raise EdgeListError("empty edge-list document")

    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListError(f"line {lineno}: expected header 'n m'") from None
    if n < 1:
        raise EdgeListError(f"line {lineno}: vertex count must be positive")
    if n > MAX_VERTICES:
        raise ScaleError(f"n={n} exceeds the {MAX_VERTICES}-vertex bound")
    if m < 0:
        raise EdgeListError(f"line {lineno}: negative edge count")
    if len(lines) - 1 != m:
        raise EdgeListError(
            f"header declares {m} edges but {len(lines) - 1} edge lines follow"
        )

    rows = [0] * n
    for lineno, raw in lines[1:]:
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected 'u v'") from None
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop {u} {v}")
        if u > v:
            raise EdgeListError(f"line {lineno}: expected u < v, got {u} {v}")
        if u < 0 or v >= n:
            raise EdgeListError(f"line {lineno}: vertex out of range for n={n}")
        if (rows[u] >> v) & 1:
            raise EdgeListError(f"line {lineno}: duplicate edge {u} {v}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def dump_graph(g: Graph) -> str:
    """Serialize to the exact edge-list format (sorted edges, single spaces)."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string (standard 6-bit encoding, n <= 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise EdgeListError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise EdgeListError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] == 63:
        raise ScaleError("graph6 reader supports n <= 62")
    n = vals[0]
    if n < 1:
        raise EdgeListError("graph6 string encodes an empty graph")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - 1 != need:
        raise EdgeListError("graph6 string has the wrong length")
    bits = []
    for v in vals[1:]:
        for k in range(5, -1, -1):
            bits.append((v >> k) & 1)
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (n <= 62)."""
    if g.n > 62:
        raise ScaleError("graph6 writer supports n <= 62")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


@dataclass(frozen=True)
class Membership:
    """Connectivity plus the 2-coloring, when one exists."""

    connected: bool
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None


def validate_membership(g: Graph) -> Membership:
    """Check connectivity and bipartiteness.

    The orientation of the bipartition is deterministic: each component is
    colored from its smallest vertex, which lands in the first part, so the
    part containing vertex 0 is always setA.
    """
    color = [-1] * g.n
    components = 0
    two_colorable = True
    for start in range(g.n):
        if color[start] != -1:
            continue
        components += 1
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in iter_bits(g.adjacency[u]):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    two_colorable = False
    bipartition = None
    if two_colorable:
        side_a = tuple(v for v in range(g.n) if color[v] == 0)
        side_b = tuple(v for v in range(g.n) if color[v] == 1)
        bipartition = (side_a, side_b)
    return Membership(connected=(components == 1), bipartition=bipartition)


def distance(g: Graph, u: int, v: int) -> int | None:
    """BFS distance between u and v, or None if v is unreachable."""
    if u == v:
        return 0
    seen = 1 << u
    frontier = g.adjacency[u]
    d = 1
    while frontier & ~seen:
        frontier &= ~seen
        if (frontier >> v) & 1:
            return d
        seen |= frontier
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= g.adjacency[w]
        frontier = nxt
        d += 1
    return None


def matching_counts(g: Graph, r_max: int) -> tuple[int, ...]:
    """Numbers of r-matchings for r = 0..r_max, in one memoized pass.

    Branch-and-count on the lowest available vertex with vertex-availability
    masks; counts are truncated above r_max.
    """
    if r_max < 0:
        raise ValueError("r must be non-negative")
    cap = min(r_max, g.n // 2)
    adj = g.adjacency
    memo: dict[int, tuple[int, ...]] = {}

    def rec(mask: int) -> tuple[int, ...]:
        if mask == 0:
            return (1,) + (0,) * cap
        cached = memo.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        counts = list(rec(rest))
        if cap:
            nb = adj[v] & rest
            while nb:
                ub = nb & -nb
                nb ^= ub
                sub = rec(rest ^ ub)
                for i in range(cap - 1, -1, -1):
                    if sub[i]:
                        counts[i + 1] += sub[i]
        result = tuple(counts)
        memo[mask] = result
        return result

    out = rec((1 << g.n) - 1)
    return out + (0,) * (r_max + 1 - len(out))


def count_matchings(g: Graph, r: int) -> int:
    """Exact number of r-matchings; m_0 = 1 and m_1 = m."""
    return matching_counts(g, r)[r]


@dataclass(frozen=True)
class CycleCounts:
    c3: int
    c4: int


def count_short_cycles(g: Graph) -> CycleCounts:
    """Triangle and quadrangle counts via common-neighborhood popcounts.

    Each triangle is seen once per edge and each quadrangle once per diagonal
    pair, so the raw sums are divided by 3 and 2 respectively.
    """
    adj = g.adjacency
    tri = 0
    quad = 0
    for u in range(g.n):
        row = adj[u]
        for v in iter_bits(row >> (u + 1)):
            tri += (row & adj[u + 1 + v]).bit_count()
        for v in range(u + 1, g.n):
            quad += comb((row & adj[v]).bit_count(), 2)
    return CycleCounts(c3=tri // 3, c4=quad // 2)


def quadrangles(g: Graph) -> list[tuple[int, int, int, int]]:
    """All 4-cycles (a, b, c, d) with a minimal and b < d; a-c is the diagonal."""
    out = []
    adj = g.adjacency
    for a in range(g.n):
        above = ((1 << g.n) - 1) & ~((1 << (a + 1)) - 1)
        for c in range(a + 1, g.n):
            common = adj[a] & adj[c] & above & ~(1 << c)
            picks = tuple(iter_bits(common))
            for i in range(len(picks)):
                for j in range(i + 1, len(picks)):
                    out.append((a, picks[i], c, picks[j]))
    return out


def sachs_coefficient(g: Graph, i: int) -> int:
    """Adjacency coefficient a_i by explicit enumeration.

    Sums (-1)^components * 2^cycles over every i-vertex subgraph whose
    components are single edges or cycles. Exponential; guarded by
    SACHS_ORACLE_LIMIT.
    """
    if not 0 <= i <= g.n:
        raise ValueError("coefficient index out of range")
    if g.n > SACHS_ORACLE_LIMIT:
        raise ScaleError(f"enumeration oracle limited to n <= {SACHS_ORACLE_LIMIT}")
    if i == 0:
        return 1
    adj = g.adjacency
    total = 0

    def rec(mask: int, used: int, comps: int, cycles: int) -> None:
        nonlocal total
        if used == i:
            total += (1 << cycles) if comps % 2 == 0 else -(1 << cycles)
            return
        if mask == 0 or used + mask.bit_count() < i:
            return
        vbit = mask & -mask
        v = vbit.bit_length() - 1
        rest = mask ^ vbit
        rec(rest, used, comps, cycles)
        room = i - used
        if room >= 2:
            nb = adj[v] & rest
            while nb:
                ub = nb & -nb
                nb ^= ub
                rec(rest ^ ub, used + 2, comps + 1, cycles)
        if room >= 3:
            # simple cycles through v, with v the least vertex on the cycle;
            # the direction is pinned by first < closing vertex
            def walk(w: int, visited: int, length: int, first: int) -> None:
                if length + 1 > room:
                    return
                cand = adj[w] & mask & ~visited
                while cand:
                    xbit = cand & -cand
                    cand ^= xbit
                    x = xbit.bit_length() - 1
                    nv = visited | xbit
                    if x > first and (adj[x] >> v) & 1 and length + 1 >= 3:
                        rec(mask & ~nv, used + length + 1, comps + 1, cycles + 1)
                    walk(x, nv, length + 1, first)

            sb = adj[v] & rest
            while sb:
                fbit = sb & -sb
                sb ^= fbit
                f = fbit.bit_length() - 1
                walk(f, vbit | fbit, 2, f)

    rec((1 << g.n) - 1, 0, 0, 0)
    return total


def iter_sachs_subgraphs(g: Graph, size: int):
    """Yield (vertex_mask, edge_set, components, cycles) for each size-Sachs
    subgraph. Test fixture; same enumeration order as sachs_coefficient."""
    if not 0 <= size <= g.n:
        raise ValueError("size out of range")
    if g.n > SACHS_ORACLE_LIMIT:
        raise ScaleError(f"enumeration oracle limited to n <= {SACHS_ORACLE_LIMIT}")
    adj = g.adjacency
    out: list[tuple[int, frozenset, int, int]] = []

    def emit(mask_used: int, edges: list, comps: int, cycles: int) -> None:
        out.append((mask_used, frozenset(edges), comps, cycles))

    def rec(mask: int, used_mask: int, used: int, edges: list, comps: int, cycles: int) -> None:
        if used == size:
            emit(used_mask, edges, comps, cycles)
            return
        if mask == 0 or used + mask.bit_count() < size:
            return
        vbit = mask & -mask
        v = vbit.bit_length() - 1
        rest = mask ^ vbit
        rec(rest, used_mask, used, edges, comps, cycles)
        room = size - used
        if room >= 2:
            nb = adj[v] & rest
            while nb:
                ub = nb & -nb
                nb ^= ub
                u = ub.bit_length() - 1
                rec(rest ^ ub, used_mask | vbit | ub, used + 2,
                    edges + [(v, u)], comps + 1, cycles)
        if room >= 3:
            def walk(w: int, visited: int, path: list, length: int, first: int) -> None:
                if length + 1 > room:
                    return
                cand = adj[w] & mask & ~visited
                while cand:
                    xbit = cand & -cand
                    cand ^= xbit
                    x = xbit.bit_length() - 1
                    nv = visited | xbit
                    npath = path + [x]
                    if x > first and (adj[x] >> v) & 1 and length + 1 >= 3:
                        cyc = [v] + npath
                        cedges = [
                            (min(cyc[t], cyc[(t + 1) % len(cyc)]),
                             max(cyc[t], cyc[(t + 1) % len(cyc)]))
                            for t in range(len(cyc))
                        ]
                        rec(mask & ~nv, used_mask | nv, used + length + 1,
                            edges + cedges, comps + 1, cycles + 1)
                    walk(x, nv, npath, length + 1, first)

            sb = adj[v] & rest
            while sb:
                fbit = sb & -sb
                sb ^= fbit
                f = fbit.bit_length() - 1
                walk(f, vbit | fbit, [f], 2, f)

    if size == 0:
        return [(0, frozenset(), 0, 0)]
    rec((1 << g.n) - 1, 0, 0, [], 0, 0)
    return out


def _edge_set_components_ok(edges) -> bool:
    """True iff every component of the edge set is a single edge or a cycle."""
    deg: dict[int, int] = {}
    nbr: dict[int, list[int]] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        if deg[u] > 2 or deg[v] > 2:
            return False
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    seen: set[int] = set()
    for start in nbr:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        i = 0
        while i < len(comp):
            for w in nbr[comp[i]]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
            i += 1
        ecount = sum(len(nbr[w]) for w in comp) // 2
        if not (ecount == len(comp) or (ecount == 1 and len(comp) == 2)):
            return False
    return True


def sachs_embedding_sum(
    g: Graph, quad: tuple[int, int, int, int], size: int, subgraphs=None
) -> int:
    """Signed sum over all size-Sachs subgraphs embedding the given 4-cycle.

    A subgraph H embeds the cycle C when the common edges span C as a Sachs
    subgraph (one of C's two perfect matchings, or C itself) and the edge
    union is again a size-Sachs subgraph. Cancellation makes this sum zero
    on bipartite graphs; the function exists so tests can observe that.
    Pass the iter_sachs_subgraphs(g, size) list as subgraphs to amortize the
    enumeration over many quadrangles.
    """
    a, b, c, d = quad
    ring = [(a, b), (b, c), (c, d), (a, d)]
    qedges = frozenset((min(u, v), max(u, v)) for u, v in ring)
    if len(qedges) != 4 or any(not g.has_edge(u, v) for u, v in qedges):
        raise ValueError("quad must list a 4-cycle in cyclic order")
    qmask = (1 << a) | (1 << b) | (1 << c) | (1 << d)
    if subgraphs is None:
        subgraphs = iter_sachs_subgraphs(g, size)
    total = 0
    for vmask, edges, comps, cycles in subgraphs:
        if vmask & qmask != qmask:
            continue
        inter = edges & qedges
        if len(inter) == 2:
            (u1, v1), (u2, v2) = sorted(inter)
            if len({u1, v1, u2, v2}) != 4:
                continue
        elif len(inter) != 4:
            continue
        if not _edge_set_components_ok(edges | qedges):
            continue
        total += (1 << cycles) if comps % 2 == 0 else -(1 << cycles)
    return total


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients a_0..a_n of det(lambda*I - A), exact integers."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("leading coefficient must be 1")
        if len(self.coeffs) > 1 and self.coeffs[1] != 0:
            raise ValueError("trace coefficient must be 0 for a simple graph")

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ra = a[i]
        oi = out[i]
        for k in range(n):
            aik = ra[k]
            if aik:
                rb = b[k]
                for j in range(n):
                    oi[j] += aik * rb[j]
    return out


def charpoly_coefficients(g: Graph) -> CoefficientVector:
    """Exact characteristic-polynomial coefficients.

    Integer-preserving trace recurrence; every division is exact (asserted),
    and Python integers cannot overflow. Independent of sachs_coefficient.
    """
    n = g.n
    a = [[(g.adjacency[u] >> v) & 1 for v in range(n)] for u in range(n)]
    coeffs = [1]
    m = [row[:] for row in a]
    for k in range(1, n + 1):
        if k > 1:
            for d in range(n):
                m[d][d] += coeffs[-1]
            m = _int_matmul(a, m)
        tr = sum(m[d][d] for d in range(n))
        if tr % k:
            raise RuntimeError("inexact division in the trace recurrence")
        coeffs.append(-(tr // k))
    vec = CoefficientVector(tuple(coeffs))
    if n >= 2 and vec[2] != -g.m:
        raise RuntimeError("second coefficient disagrees with the edge count")
    return vec


def a4_components(g: Graph) -> tuple[int, int, int]:
    """(a4, m2, c4) from the degree/codegree closed forms."""
    m2 = comb(g.m, 2) - sum(comb(g.degree(u), 2) for u in range(g.n))
    c4 = count_short_cycles(g).c4
    return m2 - 2 * c4, m2, c4


def a4_fast(g: Graph) -> int:
    """Fourth adjacency coefficient as m2 - 2*c4."""
    return a4_components(g)[0]

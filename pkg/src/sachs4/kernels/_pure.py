"""Pure-Python enumeration kernels.

Fallback twin of the compiled module sachs4.kernels._native; both expose the
same contract and the backend is picked once at import time by the package
__init__. A "row set" is a tuple of bit masks, one per vertex of the larger
bipartition side, each mask over the b vertices of the smaller side.
"""

import itertools
from math import comb

from ..errors import ScaleError

MAX_ROWS = 32
MAX_COLS = 8

BACKEND = "pure"

_perm_cache: dict[int, list[tuple[int, ...]]] = {}
_table_cache: dict[int, list[list[int]]] = {}


def _perms(b: int) -> list[tuple[int, ...]]:
    cached = _perm_cache.get(b)
    if cached is None:
        cached = list(itertools.permutations(range(b)))
        _perm_cache[b] = cached
    return cached


def _tables(b: int) -> list[list[int]]:
    # mask-remap lookup tables; only built for small b, bit loops otherwise
    cached = _table_cache.get(b)
    if cached is None:
        cached = []
        for perm in _perms(b):
            table = [0] * (1 << b)
            for mask in range(1 << b):
                out = 0
                rem = mask
                while rem:
                    low = rem & -rem
                    out |= 1 << perm[low.bit_length() - 1]
                    rem ^= low
                table[mask] = out
            cached.append(table)
        _table_cache[b] = cached
    return cached


def _remap(row: int, perm: tuple[int, ...]) -> int:
    out = 0
    while row:
        low = row & -row
        out |= 1 << perm[low.bit_length() - 1]
        row ^= low
    return out


def _check_dims(rows, b: int) -> None:
    if len(rows) > MAX_ROWS:
        raise ScaleError(f"kernel supports at most {MAX_ROWS} rows")
    if b > MAX_COLS:
        raise ScaleError(f"kernel supports at most {MAX_COLS} columns")
    top = 1 << b
    for row in rows:
        if not 0 <= row < top:
            raise ValueError("row mask outside the column range")


def transpose_rows(rows, b: int) -> tuple[int, ...]:
    """Columns of the 0/1 matrix as masks over the rows."""
    out = []
    for j in range(b):
        col = 0
        for i, row in enumerate(rows):
            col |= ((row >> j) & 1) << i
        out.append(col)
    return tuple(out)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def rows_connected(rows, b: int) -> bool:
    """True iff the bipartite graph covers both sides and is connected."""
    _check_dims(rows, b)
    a = len(rows)
    cols = transpose_rows(rows, b)
    seen_a = 1
    seen_b = 0
    new_a = 1
    while new_a:
        nb = 0
        for i in _bits(new_a):
            nb |= rows[i]
        new_b = nb & ~seen_b
        seen_b |= new_b
        na = 0
        for j in _bits(new_b):
            na |= cols[j]
        new_a = na & ~seen_a
        seen_a |= new_a
    return seen_a == (1 << a) - 1 and seen_b == (1 << b) - 1


def rows_a4(rows, b: int) -> int:
    """m2 - 2*c4 of the bipartite graph, from degrees and codegrees."""
    _check_dims(rows, b)
    m = sum(r.bit_count() for r in rows)
    pairs = comb(m, 2)
    for r in rows:
        pairs -= comb(r.bit_count(), 2)
    for col in transpose_rows(rows, b):
        pairs -= comb(col.bit_count(), 2)
    c4 = 0
    a = len(rows)
    for i in range(a):
        ri = rows[i]
        for j in range(i + 1, a):
            c4 += comb((ri & rows[j]).bit_count(), 2)
    return pairs - 2 * c4


def _smaller_exists(cand, rows_like, b: int) -> bool:
    # does any column permutation of rows_like sort below cand?
    n = len(cand)
    if b <= 6:
        for table in _tables(b):
            mapped = sorted(table[r] for r in rows_like)
            for x, y in zip(mapped, cand):
                if x != y:
                    if x < y:
                        return True
                    break
    else:
        for perm in _perms(b):
            mapped = sorted(_remap(r, perm) for r in rows_like)
            for x, y in zip(mapped, cand):
                if x != y:
                    if x < y:
                        return True
                    break
    return False


def is_canonical_rows(rows, b: int, include_transpose: bool) -> bool:
    """True iff rows (ascending) is minimal over column permutations, and over
    the transpose too when include_transpose is set (square case only)."""
    _check_dims(rows, b)
    if any(rows[i] > rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError("candidate rows must be sorted ascending")
    if include_transpose and len(rows) != b:
        raise ValueError("transpose comparison needs a square matrix")
    if _smaller_exists(rows, rows, b):
        return False
    if include_transpose and _smaller_exists(rows, transpose_rows(rows, b), b):
        return False
    return True


def canonical_rows(rows, b: int, include_transpose: bool) -> tuple[int, ...]:
    """The minimal sorted row tuple over column permutations (and transpose)."""
    _check_dims(rows, b)
    if include_transpose and len(rows) != b:
        raise ValueError("transpose comparison needs a square matrix")
    best = None
    variants = [tuple(rows)]
    if include_transpose:
        variants.append(transpose_rows(rows, b))
    for var in variants:
        for perm in _perms(b):
            mapped = tuple(sorted(_remap(r, perm) for r in var))
            if best is None or mapped < best:
                best = mapped
    return best


def inspect_rows(rows, b: int, include_transpose: bool):
    """Connectivity, canonicity and a4 in one call.

    Returns the a4 value when rows is the canonical representative of a
    connected bipartite graph, else None.
    """
    if not rows_connected(rows, b):
        return None
    if not is_canonical_rows(rows, b, include_transpose):
        return None
    return rows_a4(rows, b)

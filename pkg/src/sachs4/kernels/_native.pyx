# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; exact twin of sachs4.kernels._pure."""

from itertools import permutations

from sachs4.errors import ScaleError

BACKEND = "native"

MAX_ROWS = 32
MAX_COLS = 8

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

_perm_blob_cache = {}


cdef bytes _perm_blob(int b):
    blob = _perm_blob_cache.get(b)
    if blob is None:
        blob = b"".join(bytes(p) for p in permutations(range(b)))
        _perm_blob_cache[b] = blob
    return blob


cdef inline void _sort_asc(unsigned long long* arr, int k) nogil:
    cdef int i, j
    cdef unsigned long long key
    for i in range(1, k):
        key = arr[i]
        j = i - 1
        while j >= 0 and arr[j] > key:
            arr[j + 1] = arr[j]
            j -= 1
        arr[j + 1] = key


cdef int _load_rows(object rows, int b, unsigned long long* buf) except -1:
    cdef int a = len(rows)
    cdef int i
    cdef unsigned long long top = (<unsigned long long>1) << b
    if a > MAX_ROWS:
        raise ScaleError(f"kernel supports at most {MAX_ROWS} rows")
    if b > MAX_COLS:
        raise ScaleError(f"kernel supports at most {MAX_COLS} columns")
    for i in range(a):
        buf[i] = rows[i]
        if buf[i] >= top:
            raise ValueError("row mask outside the column range")
    return a


cdef void _transpose(unsigned long long* rows, int a, int b,
                     unsigned long long* out) nogil:
    cdef int i, j
    for j in range(b):
        out[j] = 0
        for i in range(a):
            out[j] |= ((rows[i] >> j) & 1ULL) << i


def transpose_rows(rows, int b):
    """Columns of the 0/1 matrix as masks over the rows."""
    cdef unsigned long long buf[32]
    cdef unsigned long long tr[8]
    cdef int a = _load_rows(rows, b, buf)
    _transpose(buf, a, b, tr)
    return tuple(tr[j] for j in range(b))


cdef bint _connected(unsigned long long* rows, int a, int b) nogil:
    cdef unsigned long long cols[8]
    cdef unsigned long long seen_a, seen_b, new_a, new_b, acc
    cdef int i, j
    _transpose(rows, a, b, cols)
    seen_a = 1
    seen_b = 0
    new_a = 1
    while new_a:
        acc = 0
        for i in range(a):
            if (new_a >> i) & 1ULL:
                acc |= rows[i]
        new_b = acc & ~seen_b
        seen_b |= new_b
        acc = 0
        for j in range(b):
            if (new_b >> j) & 1ULL:
                acc |= cols[j]
        new_a = acc & ~seen_a
        seen_a |= new_a
    return seen_a == ((<unsigned long long>1) << a) - 1 and \
        seen_b == ((<unsigned long long>1) << b) - 1


def rows_connected(rows, int b):
    """True iff the bipartite graph covers both sides and is connected."""
    cdef unsigned long long buf[32]
    cdef int a = _load_rows(rows, b, buf)
    return bool(_connected(buf, a, b))


cdef long long _a4(unsigned long long* rows, int a, int b) nogil:
    cdef unsigned long long cols[8]
    cdef long long m = 0, pairs, c4 = 0
    cdef int i, j, d
    for i in range(a):
        m += __builtin_popcountll(rows[i])
    pairs = m * (m - 1) // 2
    for i in range(a):
        d = __builtin_popcountll(rows[i])
        pairs -= (<long long>d) * (d - 1) // 2
    _transpose(rows, a, b, cols)
    for j in range(b):
        d = __builtin_popcountll(cols[j])
        pairs -= (<long long>d) * (d - 1) // 2
    for i in range(a):
        for j in range(i + 1, a):
            d = __builtin_popcountll(rows[i] & rows[j])
            c4 += (<long long>d) * (d - 1) // 2
    return pairs - 2 * c4


def rows_a4(rows, int b):
    """m2 - 2*c4 of the bipartite graph, from degrees and codegrees."""
    cdef unsigned long long buf[32]
    cdef int a = _load_rows(rows, b, buf)
    return _a4(buf, a, b)


cdef inline unsigned long long _remap(unsigned long long row,
                                      const unsigned char* perm) nogil:
    cdef unsigned long long out = 0
    cdef int j = 0
    while row:
        if row & 1ULL:
            out |= (<unsigned long long>1) << perm[j]
        row >>= 1
        j += 1
    return out


cdef int _smaller_exists(unsigned long long* cand, int a,
                         unsigned long long* variant, int b,
                         const unsigned char* perms, int nperms):
    # 1 if some column permutation of variant sorts strictly below cand
    cdef unsigned long long mapped[32]
    cdef int p, i, cmp_res
    cdef const unsigned char* perm
    for p in range(nperms):
        perm = perms + p * b
        for i in range(a):
            mapped[i] = _remap(variant[i], perm)
        _sort_asc(mapped, a)
        cmp_res = 0
        for i in range(a):
            if mapped[i] != cand[i]:
                cmp_res = -1 if mapped[i] < cand[i] else 1
                break
        if cmp_res < 0:
            return 1
    return 0


def is_canonical_rows(rows, int b, bint include_transpose):
    """True iff rows (ascending) is minimal over column permutations, and over
    the transpose too when include_transpose is set (square case only)."""
    cdef unsigned long long buf[32]
    cdef unsigned long long tr[8]
    cdef int a = _load_rows(rows, b, buf)
    cdef int i
    for i in range(a - 1):
        if buf[i] > buf[i + 1]:
            raise ValueError("candidate rows must be sorted ascending")
    if include_transpose and a != b:
        raise ValueError("transpose comparison needs a square matrix")
    blob = _perm_blob(b)
    cdef const unsigned char* perms = blob
    cdef int nperms = len(blob) // b if b else 1
    if _smaller_exists(buf, a, buf, b, perms, nperms):
        return False
    if include_transpose:
        _transpose(buf, a, b, tr)
        if _smaller_exists(buf, a, tr, b, perms, nperms):
            return False
    return True


def canonical_rows(rows, int b, bint include_transpose):
    """The minimal sorted row tuple over column permutations (and transpose)."""
    cdef unsigned long long buf[32]
    cdef unsigned long long var[32]
    cdef unsigned long long mapped[32]
    cdef unsigned long long best[32]
    cdef int a = _load_rows(rows, b, buf)
    cdef int i, p, v, cmp_res, nvariants = 1
    if include_transpose and a != b:
        raise ValueError("transpose comparison needs a square matrix")
    if include_transpose:
        nvariants = 2
    blob = _perm_blob(b)
    cdef const unsigned char* perms = blob
    cdef int nperms = len(blob) // b if b else 1
    cdef bint have_best = False
    cdef const unsigned char* perm
    for v in range(nvariants):
        if v == 0:
            for i in range(a):
                var[i] = buf[i]
        else:
            _transpose(buf, a, b, var)
        for p in range(nperms):
            perm = perms + p * b
            for i in range(a):
                mapped[i] = _remap(var[i], perm)
            _sort_asc(mapped, a)
            if not have_best:
                for i in range(a):
                    best[i] = mapped[i]
                have_best = True
                continue
            cmp_res = 0
            for i in range(a):
                if mapped[i] != best[i]:
                    cmp_res = -1 if mapped[i] < best[i] else 1
                    break
            if cmp_res < 0:
                for i in range(a):
                    best[i] = mapped[i]
    return tuple(best[i] for i in range(a))


def inspect_rows(rows, int b, bint include_transpose):
    """Connectivity, canonicity and a4 in one call.

    Returns the a4 value when rows is the canonical representative of a
    connected bipartite graph, else None.
    """
    cdef unsigned long long buf[32]
    cdef unsigned long long tr[8]
    cdef int a = _load_rows(rows, b, buf)
    cdef int i
    for i in range(a - 1):
        if buf[i] > buf[i + 1]:
            raise ValueError("candidate rows must be sorted ascending")
    if include_transpose and a != b:
        raise ValueError("transpose comparison needs a square matrix")
    if not _connected(buf, a, b):
        return None
    blob = _perm_blob(b)
    cdef const unsigned char* perms = blob
    cdef int nperms = len(blob) // b if b else 1
    if _smaller_exists(buf, a, buf, b, perms, nperms):
        return None
    if include_transpose:
        _transpose(buf, a, b, tr)
        if _smaller_exists(buf, a, tr, b, perms, nperms):
            return None
    return _a4(buf, a, b)

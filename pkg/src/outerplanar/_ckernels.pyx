# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the loops in ``_pykernels``.

``orientation_sum`` accumulates in int64.  The absolute value of every
accumulated coefficient is at most 2**(number of edges), so graphs with 62
or more edges, and accumulators too large to allocate, go to the Python
implementation instead.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc

from . import _pykernels

BACKEND = "cython"

cdef int64_t MAX_SLOTS = 1 << 24


def orientation_sum(arcs, int nvert, bint skip_root):
    cdef Py_ssize_t na = len(arcs)
    cdef Py_ssize_t k, v, slot, nslots, ntouched = 0
    cdef int start = 1 if skip_root else 0
    cdef int64_t dim = 1, pos, coeff, key, nbuckets
    cdef int par, total_edges = 0

    degs = [0] * nvert
    for i, j, a in arcs:
        degs[i] += a
        degs[j] += a
        total_edges += a
    nbuckets = degs[0] + 1 if skip_root else 1
    for v in range(start, nvert):
        dim *= degs[v] + 1
        if dim * nbuckets > MAX_SLOTS:
            break
    if total_edges >= 62 or dim * nbuckets > MAX_SLOTS:
        return _pykernels.orientation_sum(arcs, nvert, skip_root)
    nslots = dim * nbuckets

    cdef int64_t *stride = <int64_t *> malloc(nvert * sizeof(int64_t))
    cdef int *mult = <int *> malloc((na + 1) * sizeof(int))
    cdef int *flip = <int *> calloc(na + 1, sizeof(int))
    cdef int *isroot = <int *> calloc(na + 1, sizeof(int))
    cdef int64_t *delta = <int64_t *> malloc((na + 1) * sizeof(int64_t))
    cdef int64_t *binom = <int64_t *> malloc((na * 63 + 1) * sizeof(int64_t))
    cdef int64_t *acc = <int64_t *> calloc(nslots, sizeof(int64_t))
    cdef char *seen = <char *> calloc(nslots, sizeof(char))
    cdef int64_t *touched = <int64_t *> malloc(nslots * sizeof(int64_t))
    if not (stride and mult and flip and isroot and delta and binom and acc and seen and touched):
        free(stride); free(mult); free(flip); free(isroot); free(delta)
        free(binom); free(acc); free(seen); free(touched)
        raise MemoryError()

    try:
        # mixed-radix strides, last vertex least significant
        stride[nvert - 1] = 1
        for v in range(nvert - 2, -1, -1):
            stride[v] = stride[v + 1] * (degs[v + 1] + 1) if v + 1 >= start else 0
        if start:
            stride[0] = 0

        pos = 0
        for k, (i, j, a) in enumerate(arcs):
            mult[k] = a
            isroot[k] = 1 if (skip_root and i == 0) else 0
            delta[k] = stride[i] - stride[j]
            pos += a * stride[j]
            binom[k * 63] = 1
            for u in range(1, a + 1):
                binom[k * 63 + u] = binom[k * 63 + u - 1] * (a - u + 1) // u

        key = 0
        par = 0
        while True:
            coeff = 1
            for k in range(na):
                coeff *= binom[k * 63 + flip[k]]
            if par & 1:
                coeff = -coeff
            slot = key * dim + pos
            if not seen[slot]:
                seen[slot] = 1
                touched[ntouched] = slot
                ntouched += 1
            acc[slot] += coeff

            # odometer step over flip counts
            k = na - 1
            while k >= 0 and flip[k] == mult[k]:
                pos -= mult[k] * delta[k]
                par -= mult[k]
                if isroot[k]:
                    key -= mult[k]
                flip[k] = 0
                k -= 1
            if k < 0:
                break
            flip[k] += 1
            pos += delta[k]
            par += 1
            if isroot[k]:
                key += 1

        radix = [degs[v] + 1 for v in range(start, nvert)]
        nf = nvert - start
        buckets = {}
        for k in range(ntouched):
            slot = touched[k]
            if acc[slot] == 0:
                continue
            b = slot // dim
            rem = slot % dim
            idx = [0] * nf
            for v in range(nf - 1, -1, -1):
                idx[v] = rem % radix[v]
                rem //= radix[v]
            buckets.setdefault(b, {})[tuple(idx)] = acc[slot]
        if not buckets:
            buckets[0] = {}
        return buckets
    finally:
        free(stride); free(mult); free(flip); free(isroot); free(delta)
        free(binom); free(acc); free(seen); free(touched)


def y_degree_histogram(degrees):
    cdef Py_ssize_t m = len(degrees), k
    cdef int s = 0
    cdef int total = sum(degrees)
    cdef int *d = <int *> malloc((m + 1) * sizeof(int))
    cdef int *e = <int *> calloc(m + 1, sizeof(int))
    cdef uint64_t *out = <uint64_t *> calloc(total + 1, sizeof(uint64_t))
    if not (d and e and out):
        free(d); free(e); free(out)
        raise MemoryError()
    try:
        for k in range(m):
            d[k] = degrees[k]
        while True:
            out[s] += 1
            k = m - 1
            while k >= 0 and e[k] == d[k]:
                s -= e[k]
                e[k] = 0
                k -= 1
            if k < 0:
                break
            e[k] += 1
            s += 1
        return [out[j] for j in range(total + 1)]
    finally:
        free(d); free(e); free(out)


def rank_mod_p(rows, Py_ssize_t ncols, uint64_t p):
    """Dense elimination modulo a prime ``p < 2**32``."""
    cdef Py_ssize_t nrows = len(rows), r, c, k, piv, rank = 0
    cdef uint64_t f, inv, tmp
    if p >= (<uint64_t> 1) << 32:
        return _pykernels.rank_mod_p(rows, ncols, p)
    if nrows == 0 or ncols == 0:
        return 0
    cdef uint64_t *mat = <uint64_t *> calloc(nrows * ncols, sizeof(uint64_t))
    if not mat:
        raise MemoryError()
    try:
        for r, row in enumerate(rows):
            for c, val in row.items():
                mat[r * ncols + c] = val % p
        for c in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if mat[r * ncols + c]:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for k in range(c, ncols):
                    tmp = mat[piv * ncols + k]
                    mat[piv * ncols + k] = mat[rank * ncols + k]
                    mat[rank * ncols + k] = tmp
            inv = pow(mat[rank * ncols + c], p - 2, p)
            for r in range(rank + 1, nrows):
                f = mat[r * ncols + c]
                if f:
                    f = (f * inv) % p
                    for k in range(c, ncols):
                        if mat[rank * ncols + k]:
                            mat[r * ncols + k] = (mat[r * ncols + k] + (p - f) * mat[rank * ncols + k]) % p
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(mat)


def lie_apply(dict entries, tuple degrees, int op):
    cdef Py_ssize_t m = len(degrees), k, j
    cdef int x, n, d, total, w, s
    cdef tuple e, idx
    cdef dict out = {}
    cdef int *deg = <int *> malloc((m + 1) * sizeof(int))
    if not deg:
        raise MemoryError()
    try:
        total = 0
        for k in range(m):
            deg[k] = degrees[k]
            total += deg[k]
        if op == 2:
            for e, v in entries.items():
                s = 0
                for k in range(m):
                    s += <int> e[k]
                w = total - 2 * s
                if w:
                    out[e] = w * v
            return out
        for e, v in entries.items():
            for k in range(m):
                x = e[k]
                n = x if op == 0 else deg[k] - x
                if n == 0:
                    continue
                idx = e[:k] + ((x - 1) if op == 0 else (x + 1),) + e[k + 1:]
                prev = out.get(idx)
                out[idx] = n * v if prev is None else prev + n * v
        return {e: v for e, v in out.items() if v}
    finally:
        free(deg)

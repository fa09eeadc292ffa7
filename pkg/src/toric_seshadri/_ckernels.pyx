# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops.  Same contracts as ``_pykernels``.

Masks must fit in 64 bits and lattice-count data in int64; the selector in
``kernels`` checks both before dispatching here.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free


def adjacent_pairs(pos, neg, masks):
    cdef Py_ssize_t nrays = len(masks)
    cdef Py_ssize_t npos = len(pos), nneg = len(neg)
    cdef uint64_t *m = <uint64_t *> malloc(nrays * sizeof(uint64_t))
    cdef Py_ssize_t *pp = <Py_ssize_t *> malloc((npos + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *nn = <Py_ssize_t *> malloc((nneg + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t i, j, r, p, n
    cdef uint64_t common
    cdef bint ok
    out = []
    if m == NULL or pp == NULL or nn == NULL:
        free(m); free(pp); free(nn)
        raise MemoryError()
    try:
        for i in range(nrays):
            m[i] = <uint64_t> masks[i]
        for i in range(npos):
            pp[i] = pos[i]
        for i in range(nneg):
            nn[i] = neg[i]
        for i in range(npos):
            p = pp[i]
            for j in range(nneg):
                n = nn[j]
                common = m[p] & m[n]
                ok = True
                for r in range(nrays):
                    if r != p and r != n and (m[r] & common) == common:
                        ok = False
                        break
                if ok:
                    out.append((p, n))
    finally:
        free(m); free(pp); free(nn)
    return out


def count_lattice_points(rows, rhs, lo, hi):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t dim = len(lo)
    cdef int64_t *a = <int64_t *> malloc((nrows * dim + 1) * sizeof(int64_t))
    cdef int64_t *b = <int64_t *> malloc((nrows + 1) * sizeof(int64_t))
    cdef int64_t *x = <int64_t *> malloc((dim + 1) * sizeof(int64_t))
    cdef int64_t *l = <int64_t *> malloc((dim + 1) * sizeof(int64_t))
    cdef int64_t *h = <int64_t *> malloc((dim + 1) * sizeof(int64_t))
    cdef Py_ssize_t i, k
    cdef int64_t s, count = 0
    cdef bint inside
    if a == NULL or b == NULL or x == NULL or l == NULL or h == NULL:
        free(a); free(b); free(x); free(l); free(h)
        raise MemoryError()
    try:
        for i in range(nrows):
            b[i] = rhs[i]
            for k in range(dim):
                a[i * dim + k] = rows[i][k]
        for k in range(dim):
            l[k] = lo[k]
            h[k] = hi[k]
            x[k] = lo[k]
            if l[k] > h[k]:
                return 0
        while True:
            inside = True
            for i in range(nrows):
                s = 0
                for k in range(dim):
                    s += a[i * dim + k] * x[k]
                if s < b[i]:
                    inside = False
                    break
            if inside:
                count += 1
            # odometer step
            k = 0
            while k < dim:
                x[k] += 1
                if x[k] <= h[k]:
                    break
                x[k] = l[k]
                k += 1
            if k == dim:
                break
    finally:
        free(a); free(b); free(x); free(l); free(h)
    return count

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract as ``_pykernel``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef struct State:
    int n
    int bound
    int best
    long long nodes
    int *order
    int *ptr
    int *idx
    int *partial
    int *undecided
    int *x
    int *witness
    int found


cdef void _descend(State *st, int depth, int total) noexcept nogil:
    cdef int v, w, k, val, ok, j, branch
    st.nodes += 1
    if depth == st.n:
        if total > st.best:
            st.best = total
            for j in range(st.n):
                st.witness[j] = st.x[j]
            st.found = 1
        return
    v = st.order[depth]
    for branch in range(2):
        val = 1 - 2 * branch
        if total + val + (st.n - depth - 1) <= st.best:
            continue
        ok = 1
        for k in range(st.ptr[v], st.ptr[v + 1]):
            w = st.idx[k]
            st.partial[w] += val
            st.undecided[w] -= 1
            if st.partial[w] - st.undecided[w] > st.bound:
                ok = 0
        if ok:
            st.x[v] = val
            _descend(st, depth + 1, total + val)
            st.x[v] = 0
        for k in range(st.ptr[v], st.ptr[v + 1]):
            w = st.idx[k]
            st.partial[w] -= val
            st.undecided[w] += 1


cdef int *_to_c(list values) except NULL:
    cdef int i
    cdef int *buf = <int *> malloc((len(values) + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(len(values)):
        buf[i] = values[i]
    return buf


def branch_and_bound(int n, order, ptr, idx, int bound, int incumbent):
    cdef State st
    cdef int v
    cdef int feasible = 1
    st.n = n
    st.bound = bound
    st.best = incumbent
    st.nodes = 0
    st.found = 0
    st.order = _to_c(list(order))
    st.ptr = _to_c(list(ptr))
    st.idx = _to_c(list(idx))
    st.partial = <int *> malloc((n + 1) * sizeof(int))
    st.undecided = <int *> malloc((n + 1) * sizeof(int))
    st.x = <int *> malloc((n + 1) * sizeof(int))
    st.witness = <int *> malloc((n + 1) * sizeof(int))
    try:
        memset(st.partial, 0, (n + 1) * sizeof(int))
        memset(st.x, 0, (n + 1) * sizeof(int))
        for v in range(n):
            st.undecided[v] = st.ptr[v + 1] - st.ptr[v]
            # a constraint over an empty set is never touched during the search
            if -st.undecided[v] > bound:
                feasible = 0
        if feasible and n > incumbent:
            with nogil:
                _descend(&st, 0, 0)
        witness = [st.witness[v] for v in range(n)] if st.found else None
        return st.best, witness, st.nodes
    finally:
        free(st.order)
        free(st.ptr)
        free(st.idx)
        free(st.partial)
        free(st.undecided)
        free(st.x)
        free(st.witness)


cdef int _valid(int n, int *ptr, int *idx, int *x, int bound) noexcept nogil:
    cdef int v, k, s
    for v in range(n):
        s = 0
        for k in range(ptr[v], ptr[v + 1]):
            s += x[idx[k]]
        if s > bound:
            return 0
    return 1


def brute_force(int n, ptr, idx, int bound):
    cdef int *cptr = _to_c(list(ptr))
    cdef int *cidx = _to_c(list(idx))
    cdef int *x = <int *> malloc((n + 1) * sizeof(int))
    cdef int *comb = <int *> malloc((n + 1) * sizeof(int))
    cdef long long examined = 0
    cdef int k, i, j, hit = 0, found_k = -1
    try:
        with nogil:
            for k in range(n + 1):
                for i in range(k):
                    comb[i] = i
                while True:
                    examined += 1
                    for i in range(n):
                        x[i] = 1
                    for i in range(k):
                        x[comb[i]] = -1
                    if _valid(n, cptr, cidx, x, bound):
                        hit = 1
                        found_k = k
                        break
                    # next k-combination in lexicographic order
                    i = k - 1
                    while i >= 0 and comb[i] == n - k + i:
                        i -= 1
                    if i < 0:
                        break
                    comb[i] += 1
                    for j in range(i + 1, k):
                        comb[j] = comb[j - 1] + 1
                if hit:
                    break
        if not hit:
            return None, None, examined
        return n - 2 * found_k, [x[i] for i in range(n)], examined
    finally:
        free(cptr)
        free(cidx)
        free(x)
        free(comb)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; a line-for-line port of ``egk._pykernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

from egk._pykernels import Cancelled, POLL_INTERVAL, edge_pairs
from egk._pykernels import max_independent_set as _py_mis


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int lowest(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


# ------------------------------------------------- maximum independent set

cdef struct MisState:
    uint64_t *adj
    int best_size
    uint64_t best_mask
    long long nodes


cdef int clique_cover(MisState *st, uint64_t cand) noexcept nogil:
    cdef int k = 0
    cdef uint64_t rest = cand, inside, w
    cdef int v
    while rest:
        v = lowest(rest)
        rest &= rest - 1
        inside = rest & st.adj[v]
        while inside:
            w = inside & (~inside + 1)
            rest &= ~w
            inside &= st.adj[lowest(w)]
        k += 1
    return k


cdef int mis_rec(MisState *st, uint64_t cand, uint64_t chosen, int size, object cancel) except -1:
    cdef uint64_t rest, low, nb, bit
    cdef int v, d, bv, bd, hit
    st.nodes += 1
    if cancel is not None and st.nodes % POLL_INTERVAL == 1 and cancel():
        raise Cancelled("independent set search cancelled")
    while cand:
        rest = cand
        hit = 0
        while rest:
            low = rest & (~rest + 1)
            rest ^= low
            v = lowest(low)
            nb = st.adj[v] & cand
            if nb == 0:
                chosen |= low
                size += 1
                cand ^= low
                hit = 1
                break
            if (nb & (nb - 1)) == 0:
                chosen |= low
                size += 1
                cand &= ~(low | nb)
                hit = 1
                break
        if not hit:
            break
    if not cand:
        if size > st.best_size:
            st.best_size = size
            st.best_mask = chosen
        return 0
    if size + clique_cover(st, cand) <= st.best_size:
        return 0
    bv = -1
    bd = -1
    rest = cand
    while rest:
        v = lowest(rest)
        rest &= rest - 1
        d = popcount(st.adj[v] & cand)
        if d > bd:
            bd = d
            bv = v
    bit = (<uint64_t>1) << bv
    mis_rec(st, cand & ~st.adj[bv] & ~bit, chosen | bit, size + 1, cancel)
    mis_rec(st, cand & ~bit, chosen, size, cancel)
    return 0


cdef uint64_t mis_mask(int n, uint64_t *adj, object cancel) except? 0:
    cdef MisState st
    st.adj = adj
    st.best_size = -1
    st.best_mask = 0
    st.nodes = 0
    cdef uint64_t full = ((<uint64_t>1) << n) - 1 if n < 64 else ~(<uint64_t>0)
    mis_rec(&st, full, 0, 0, cancel)
    return st.best_mask


def max_independent_set(int n, adj_masks, cancel=None):
    """Bitmask of a maximum independent set (see ``_pykernels``)."""
    if n > 64:
        return _py_mis(n, adj_masks, cancel)
    cdef uint64_t buf[64]
    cdef int i
    for i in range(n):
        buf[i] = <uint64_t>adj_masks[i]
    return int(mis_mask(n, buf, cancel))


# ------------------------------------------------------ Edmonds' blossom

cdef struct BlossomWork:
    int n
    int *off
    int *nbr
    int *match
    int *parent
    int *base
    int *queue
    char *used
    char *blossom
    char *seen


cdef int lca(BlossomWork *w, int a, int b) noexcept nogil:
    memset(w.seen, 0, w.n)
    while True:
        a = w.base[a]
        w.seen[a] = 1
        if w.match[a] == -1:
            break
        a = w.parent[w.match[a]]
    while True:
        b = w.base[b]
        if w.seen[b]:
            return b
        b = w.parent[w.match[b]]


cdef void mark_path(BlossomWork *w, int v, int b, int child) noexcept nogil:
    while w.base[v] != b:
        w.blossom[w.base[v]] = 1
        w.blossom[w.base[w.match[v]]] = 1
        w.parent[v] = child
        child = w.match[v]
        v = w.parent[w.match[v]]


cdef int find_path(BlossomWork *w, int root) noexcept nogil:
    cdef int n = w.n
    cdef int i, v, to, cur, nxt, e
    cdef int qh = 0, qt = 1
    for i in range(n):
        w.used[i] = 0
        w.parent[i] = -1
        w.base[i] = i
    w.used[root] = 1
    w.queue[0] = root
    while qh < qt:
        v = w.queue[qh]
        qh += 1
        for e in range(w.off[v], w.off[v + 1]):
            to = w.nbr[e]
            if w.base[v] == w.base[to] or w.match[v] == to:
                continue
            if to == root or (w.match[to] != -1 and w.parent[w.match[to]] != -1):
                cur = lca(w, v, to)
                memset(w.blossom, 0, n)
                mark_path(w, v, cur, to)
                mark_path(w, to, cur, v)
                for i in range(n):
                    if w.blossom[w.base[i]]:
                        w.base[i] = cur
                        if not w.used[i]:
                            w.used[i] = 1
                            w.queue[qt] = i
                            qt += 1
            elif w.parent[to] == -1:
                w.parent[to] = v
                if w.match[to] == -1:
                    return to
                nxt = w.match[to]
                w.used[nxt] = 1
                w.queue[qt] = nxt
                qt += 1
    return -1


cdef void blossom_run(BlossomWork *w) noexcept nogil:
    cdef int root, v, pv, ppv
    for root in range(w.n):
        w.match[root] = -1
    for root in range(w.n):
        if w.match[root] != -1:
            continue
        v = find_path(w, root)
        while v != -1:
            pv = w.parent[v]
            ppv = w.match[pv]
            w.match[v] = pv
            w.match[pv] = v
            v = ppv


cdef int work_alloc(BlossomWork *w, int n, int nnz) except -1:
    w.n = n
    w.off = <int *>malloc((n + 1) * sizeof(int))
    w.nbr = <int *>malloc((nnz + 1) * sizeof(int))
    w.match = <int *>malloc((n + 1) * sizeof(int))
    w.parent = <int *>malloc((n + 1) * sizeof(int))
    w.base = <int *>malloc((n + 1) * sizeof(int))
    w.queue = <int *>malloc((n + 1) * sizeof(int))
    w.used = <char *>malloc(n + 1)
    w.blossom = <char *>malloc(n + 1)
    w.seen = <char *>malloc(n + 1)
    if (w.off == NULL or w.nbr == NULL or w.match == NULL or w.parent == NULL
            or w.base == NULL or w.queue == NULL or w.used == NULL
            or w.blossom == NULL or w.seen == NULL):
        work_free(w)
        raise MemoryError()
    return 0


cdef void work_free(BlossomWork *w) noexcept nogil:
    free(w.off)
    free(w.nbr)
    free(w.match)
    free(w.parent)
    free(w.base)
    free(w.queue)
    free(w.used)
    free(w.blossom)
    free(w.seen)


def maximum_matching(int n, adj):
    """Mate array of a maximum matching (see ``_pykernels``)."""
    cdef BlossomWork w
    cdef int nnz = 0, v, e
    for v in range(n):
        nnz += len(adj[v])
    work_alloc(&w, n, nnz)
    try:
        e = 0
        for v in range(n):
            w.off[v] = e
            for x in adj[v]:
                w.nbr[e] = x
                e += 1
        w.off[n] = e
        blossom_run(&w)
        return [w.match[v] for v in range(n)]
    finally:
        work_free(&w)


# ----------------------------------------------------------- edge census

def census(int n, long long lo, long long hi):
    """Connected-graph scan over edge masks (see ``_pykernels.census``)."""
    if n > 11:
        raise ValueError("census supports n <= 11")
    pairs = edge_pairs(n)
    cdef int npairs = len(pairs)
    cdef int pi[64]
    cdef int pj[64]
    cdef int k, v, u, d, dmin_v, dmax_v, mu_v, e
    for k in range(npairs):
        pi[k] = pairs[k][0]
        pj[k] = pairs[k][1]
    cdef uint64_t adjm[64]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t seen, frontier, nxt, f, mm
    cdef long long mask
    cdef BlossomWork w
    work_alloc(&w, n, 2 * npairs)
    conn, dmin, dmax, alpha, mu = [], [], [], [], []
    try:
        for mask in range(lo, hi):
            for v in range(n):
                adjm[v] = 0
            mm = <uint64_t>mask
            k = 0
            while mm:
                if mm & 1:
                    adjm[pi[k]] |= (<uint64_t>1) << pj[k]
                    adjm[pj[k]] |= (<uint64_t>1) << pi[k]
                mm >>= 1
                k += 1
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    nxt |= adjm[lowest(f)]
                    f &= f - 1
                frontier = nxt & ~seen
                seen |= nxt
            if seen != full:
                conn.append(0)
                dmin.append(-1)
                dmax.append(-1)
                alpha.append(-1)
                mu.append(-1)
                continue
            dmin_v = 64
            dmax_v = 0
            e = 0
            for v in range(n):
                d = popcount(adjm[v])
                if d < dmin_v:
                    dmin_v = d
                if d > dmax_v:
                    dmax_v = d
                w.off[v] = e
                for u in range(n):
                    if (adjm[v] >> u) & 1:
                        w.nbr[e] = u
                        e += 1
            w.off[n] = e
            blossom_run(&w)
            mu_v = 0
            for v in range(n):
                if w.match[v] > v:
                    mu_v += 1
            conn.append(1)
            dmin.append(dmin_v)
            dmax.append(dmax_v)
            alpha.append(popcount(mis_mask(n, adjm, None)))
            mu.append(mu_v)
    finally:
        work_free(&w)
    return conn, dmin, dmax, alpha, mu

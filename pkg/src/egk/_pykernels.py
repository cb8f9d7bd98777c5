"""Pure-Python hot kernels.

This module and the compiled ``_ckernels`` expose the same three functions and
must return identical results for identical input (same scan orders, same
tie-breaking).  ``egk.kernels`` picks one at import time.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

POLL_INTERVAL = 1024


class Cancelled(RuntimeError):
    """Raised when a cancellation callback asks a search to stop."""


# ------------------------------------------------- maximum independent set

def max_independent_set(n: int, adj_masks: Sequence[int],
                        cancel: Callable[[], bool] | None = None) -> int:
    """Bitmask of a maximum independent set.

    Branch and bound: degree-0/1 vertices are taken greedily, the bound is a
    greedy clique cover, branching is on a maximum-degree vertex (lowest id on
    ties), include-branch first.
    """
    adj = list(adj_masks)
    best = [-1, 0]
    nodes = [0]

    def clique_cover(cand: int) -> int:
        k = 0
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            inside = rest & adj[low.bit_length() - 1]
            while inside:
                w = inside & -inside
                rest &= ~w
                inside &= adj[w.bit_length() - 1]
            k += 1
        return k

    def rec(cand: int, chosen: int, size: int) -> None:
        nodes[0] += 1
        if cancel is not None and nodes[0] % POLL_INTERVAL == 1 and cancel():
            raise Cancelled("independent set search cancelled")
        while cand:
            rest = cand
            hit = False
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                nb = adj[v] & cand
                if nb == 0:
                    chosen |= low
                    size += 1
                    cand ^= low
                    hit = True
                    break
                if nb & (nb - 1) == 0:
                    chosen |= low
                    size += 1
                    cand &= ~(low | nb)
                    hit = True
                    break
            if not hit:
                break
        if not cand:
            if size > best[0]:
                best[0] = size
                best[1] = chosen
            return
        if size + clique_cover(cand) <= best[0]:
            return
        bv = -1
        bd = -1
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            d = (adj[v] & cand).bit_count()
            if d > bd:
                bd = d
                bv = v
        bit = 1 << bv
        rec(cand & ~adj[bv] & ~bit, chosen | bit, size + 1)
        rec(cand & ~bit, chosen, size)

    rec((1 << n) - 1, 0, 0)
    return best[1]


# ------------------------------------------------------ Edmonds' blossom

def maximum_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Mate array of a maximum matching (-1 = unmatched).

    Edmonds' algorithm with blossom bases: one BFS per free root, roots in
    increasing id order, neighbors in adjacency order.  O(n^3).
    """
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n
    queue = [0] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> int:
        for i in range(n):
            used[i] = False
            parent[i] = -1
            base[i] = i
        used[root] = True
        qh = 0
        qt = 1
        queue[0] = root
        while qh < qt:
            v = queue[qh]
            qh += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue[qt] = i
                                qt += 1
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    nxt = match[to]
                    used[nxt] = True
                    queue[qt] = nxt
                    qt += 1
        return -1

    for root in range(n):
        if match[root] != -1:
            continue
        v = find_path(root)
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return match


# ----------------------------------------------------------- edge census

def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def census(n: int, lo: int, hi: int) -> tuple[list[int], list[int], list[int], list[int], list[int]]:
    """Scan edge masks ``lo <= mask < hi`` over the pairs of :func:`edge_pairs`.

    Returns parallel lists ``(connected, min_deg, max_deg, alpha, mu)``; the
    last four are -1 for disconnected masks, which are skipped.
    """
    pairs = edge_pairs(n)
    full = (1 << n) - 1
    conn, dmin, dmax, alpha, mu = [], [], [], [], []
    for mask in range(lo, hi):
        adjm = [0] * n
        k = 0
        mm = mask
        while mm:
            if mm & 1:
                i, j = pairs[k]
                adjm[i] |= 1 << j
                adjm[j] |= 1 << i
            mm >>= 1
            k += 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adjm[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= nxt
        if seen != full:
            conn.append(0)
            dmin.append(-1)
            dmax.append(-1)
            alpha.append(-1)
            mu.append(-1)
            continue
        degs = [a.bit_count() for a in adjm]
        adjl = [[w for w in range(n) if (adjm[v] >> w) & 1] for v in range(n)]
        mate = maximum_matching(n, adjl)
        conn.append(1)
        dmin.append(min(degs))
        dmax.append(max(degs))
        alpha.append(max_independent_set(n, adjm).bit_count())
        mu.append(sum(1 for v in range(n) if mate[v] > v))
    return conn, dmin, dmax, alpha, mu

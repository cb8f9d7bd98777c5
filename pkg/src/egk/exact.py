"""Exact oracles for the independence number and the matching number.

Two unrelated routes exist for each quantity so that every claim can be
checked by code that shares nothing with the path under test:

* alpha: bitmask branch and bound (:func:`alpha_exact`) versus vectorised
  subset enumeration (:func:`alpha_enumerate`);
* mu: Edmonds' blossom (``egk.matching``) versus memoised exhaustive search
  (:func:`mu_exact`).
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from egk import kernels
from egk.graph import Graph
from egk.kernels import Cancelled
from egk.matching import Matching

DEFAULT_MAX_N = 40
ENUMERATE_MAX_N = 20
MU_EXACT_MAX_N = 24


class OracleScaleError(ValueError):
    """The graph is too large for an exhaustive oracle."""


@dataclass(frozen=True)
class IndependentSet:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def verify_independent(g: Graph, s: Iterable[int]) -> bool:
    vs = list(s)
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    return not any(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def verify_matching(g: Graph, m: Matching | Iterable[tuple[int, int]]) -> bool:
    edges = m.edges if isinstance(m, Matching) else list(m)
    used: set[int] = set()
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
            return False
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def verify_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in g.edges())


def adjacency_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in row) for row in g.adj]


def alpha_exact(g: Graph, max_n: int = DEFAULT_MAX_N,
                cancel: Callable[[], bool] | None = None) -> tuple[int, IndependentSet]:
    """Independence number and a maximum independent set.

    ``cancel`` is polled periodically; when it returns true the search raises
    :class:`egk.kernels.Cancelled`.
    """
    if g.n > max_n:
        raise OracleScaleError(f"oracle scale exceeded: n={g.n} > {max_n}")
    if g.n == 0:
        return 0, IndependentSet(())
    mask = kernels.max_independent_set(g.n, adjacency_masks(g), cancel)
    verts = tuple(v for v in range(g.n) if (mask >> v) & 1)
    if not verify_independent(g, verts):
        raise AssertionError("branch and bound returned a dependent set")
    # complement of an independent set is a vertex cover
    rest = [v for v in range(g.n) if not (mask >> v) & 1]
    if not verify_vertex_cover(g, rest):
        raise AssertionError("complement of the independent set is not a vertex cover")
    return len(verts), IndependentSet(verts)


def alpha_enumerate(g: Graph, max_n: int = ENUMERATE_MAX_N) -> int:
    """Independence number by testing all ``2**n`` vertex subsets."""
    if g.n > max_n:
        raise OracleScaleError(f"oracle scale exceeded: n={g.n} > {max_n}")
    if g.n == 0:
        return 0
    subsets = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(subsets.shape, dtype=bool)
    for u, v in g.edges():
        ok &= ((subsets >> u) & (subsets >> v) & 1) == 0
    good = subsets[ok]
    sizes = np.zeros(good.shape, dtype=np.int64)
    for v in range(g.n):
        sizes += (good >> v) & 1
    return int(sizes.max())


def mu_exact(g: Graph, max_n: int = MU_EXACT_MAX_N) -> int:
    """Matching number by memoised exhaustive search over vertex subsets."""
    if g.n > max_n:
        raise OracleScaleError(f"oracle scale exceeded: n={g.n} > {max_n}")
    adj = adjacency_masks(g)

    @lru_cache(maxsize=None)
    def best(remaining: int) -> int:
        # drop isolated leading vertices, then the lowest vertex is either
        # unmatched or matched to one of its remaining neighbors
        while remaining:
            low = remaining & -remaining
            v = low.bit_length() - 1
            if adj[v] & remaining:
                break
            remaining ^= low
        if not remaining:
            return 0
        low = remaining & -remaining
        v = low.bit_length() - 1
        rest = remaining ^ low
        top = best(rest)
        nb = adj[v] & rest
        while nb:
            w = nb & -nb
            nb ^= w
            top = max(top, 1 + best(rest ^ w))
        return top

    return best((1 << g.n) - 1)


def has_augmenting_path(g: Graph, m: Matching) -> bool:
    """Exhaustive search for an augmenting path (exponential; small graphs).

    Explores every simple alternating path from every exposed vertex, so it
    makes no use of blossom contraction.
    """
    mates = m.mates()
    free = [v for v in range(g.n) if v not in mates]
    free_set = set(free)

    def extend(v: int, visited: set[int]) -> bool:
        # v was reached by an unmatched edge (or is the start)
        for w in g.adj[v]:
            if w in visited or mates.get(v) == w:
                continue
            if w in free_set:
                return True
            x = mates[w]
            if x in visited:
                continue
            visited.add(w)
            visited.add(x)
            if extend(x, visited):
                return True
            visited.discard(w)
            visited.discard(x)
        return False

    return any(extend(s, {s}) for s in free)


__all__ = ["Cancelled", "IndependentSet", "OracleScaleError", "alpha_enumerate", "alpha_exact",
           "has_augmenting_path", "mu_exact", "verify_independent", "verify_matching",
           "verify_vertex_cover"]

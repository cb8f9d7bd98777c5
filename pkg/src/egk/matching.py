"""Maximum matchings, König covers and Hall-deficient sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from egk import kernels
from egk.graph import Bipartition, Graph

Side = Literal["A", "B"]


class InvalidBipartitionError(ValueError):
    pass


class NotMaximumError(ValueError):
    """A matching handed to :func:`koenig_cover` was not maximum."""


@dataclass(frozen=True)
class Matching:
    """Edges stored canonically as sorted ``(min, max)`` pairs."""

    edges: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int]]) -> Matching:
        return cls(tuple(sorted((min(u, v), max(u, v)) for u, v in edges)))

    @classmethod
    def from_mates(cls, mate: list[int]) -> Matching:
        return cls(tuple((v, w) for v, w in enumerate(mate) if w > v))

    def __len__(self) -> int:
        return len(self.edges)

    def mates(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def vertices(self) -> set[int]:
        return {x for e in self.edges for x in e}


@dataclass(frozen=True)
class VertexCover:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class HallViolator:
    """A set on one side whose neighborhood is strictly smaller."""

    deficient_set: tuple[int, ...]
    neighborhood: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        nb = {w for v in self.deficient_set for w in g.adj[v]}
        return nb == set(self.neighborhood) and len(nb) < len(self.deficient_set)


def _sides(g: Graph, bip: Bipartition) -> tuple[list[int], list[int]]:
    if not bip.contains(g):
        raise InvalidBipartitionError("bipartition does not separate every edge of the graph")
    return sorted(bip.side_a), sorted(bip.side_b)


def _hk_mates(g: Graph, left: list[int]) -> dict[int, int]:
    """Hopcroft-Karp from ``left``; returns the mate map (both directions)."""
    INF = float("inf")
    mate: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if u in mate:
                dist[u] = INF
            else:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                x = mate.get(w)
                if x is None:
                    found = True
                elif dist[x] == INF:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        return found

    def dfs(root: int) -> bool:
        # iterative layered DFS; stack holds (left vertex, next neighbor index)
        stack = [[root, 0]]
        path: list[tuple[int, int]] = []
        while stack:
            frame = stack[-1]
            u, i = frame
            nbrs = g.adj[u]
            if i >= len(nbrs):
                dist[u] = INF
                stack.pop()
                if path:
                    path.pop()
                continue
            frame[1] = i + 1
            w = nbrs[i]
            x = mate.get(w)
            if x is None:
                path.append((u, w))
                for a, b in path:
                    mate[a] = b
                    mate[b] = a
                return True
            if dist[x] == dist[u] + 1:
                path.append((u, w))
                stack.append([x, 0])
        return False

    while bfs():
        for u in left:
            if u not in mate:
                dfs(u)
    return mate


def hopcroft_karp(g: Graph, bip: Bipartition) -> Matching:
    """Maximum matching of a bipartite graph."""
    left, _ = _sides(g, bip)
    mate = _hk_mates(g, left)
    return Matching.of((u, mate[u]) for u in left if u in mate)


def _alternating_reach(g: Graph, starts: Iterable[int], mates: dict[int, int]) -> set[int]:
    # from start side: leave by non-matching edges, return by matching edges
    reach = set(starts)
    queue = deque(reach)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in reach or mates.get(u) == w:
                continue
            reach.add(w)
            x = mates.get(w)
            if x is not None and x not in reach:
                reach.add(x)
                queue.append(x)
    return reach


def koenig_cover(g: Graph, bip: Bipartition, m: Matching) -> VertexCover:
    """Minimum vertex cover from a maximum matching.

    ``Z`` is everything reachable by alternating paths from unmatched
    ``side_a`` vertices; the cover is ``(A - Z) | (B & Z)``.
    """
    a, b = _sides(g, bip)
    mates = m.mates()
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise NotMaximumError(f"({u}, {v}) is not an edge")
    z = _alternating_reach(g, (u for u in a if u not in mates), mates)
    cover = sorted([u for u in a if u not in z] + [w for w in b if w in z])
    cset = set(cover)
    if len(cover) != len(m) or any(u not in cset and v not in cset for u, v in g.edges()):
        raise NotMaximumError("matching is not maximum: König construction failed")
    return VertexCover(tuple(cover))


def _side(bip: Bipartition, side: Side) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if side == "A":
        return bip.side_a, bip.side_b
    if side == "B":
        return bip.side_b, bip.side_a
    raise ValueError(f"side must be 'A' or 'B', not {side!r}")


def saturating_matching(g: Graph, bip: Bipartition, side: Side = "A") -> Matching | HallViolator:
    """A matching covering every vertex of ``side``, or a Hall violator."""
    _sides(g, bip)
    this, _ = _side(bip, side)
    left = sorted(this)
    mates = _hk_mates(g, left)
    free = [u for u in left if u not in mates]
    if not free:
        return Matching.of((u, mates[u]) for u in left)
    z = _alternating_reach(g, free, mates)
    sset = set(this)
    s = tuple(sorted(v for v in z if v in sset))
    nb = tuple(sorted(v for v in z if v not in sset))
    viol = HallViolator(s, nb)
    assert len(nb) == len(s) - len(free), "deficiency count mismatch"
    return viol


def hall_violator(g: Graph, bip: Bipartition, side: Side = "A") -> HallViolator | None:
    res = saturating_matching(g, bip, side)
    return res if isinstance(res, HallViolator) else None


def blossom_maximum_matching(g: Graph) -> Matching:
    """Maximum matching of an arbitrary simple graph (Edmonds)."""
    return Matching.from_mates(kernels.maximum_matching(g.n, g.adj))


def matching_number(g: Graph) -> int:
    return len(blossom_maximum_matching(g))

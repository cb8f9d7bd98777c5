"""Constructors for extremal families and test corpora."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

from egk.bubbles import (TWO_CONNECTED_CATALOG, BubbleCertificate, GenerationError,
                         generate_bubble)
from egk.graph import Graph, GraphError, is_connected, is_two_connected
from egk.kernels import edge_pairs
from egk.recognition import SpecialDecomposition, verify_special


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edges are the set bits of ``mask`` over :func:`edge_pairs`."""
    pairs = edge_pairs(n)
    adj: list[list[int]] = [[] for _ in range(n)]
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            adj[i].append(j)
            adj[j].append(i)
        mask >>= 1
        k += 1
    for row in adj:
        row.sort()
    return Graph._trusted(adj)


def generate_biregular(delta: int, Delta: int, scale: int = 1, seed: int = 0,
                       max_tries: int = 2000) -> Graph:
    """Connected bipartite graph, side A of degree ``delta``, side B of degree ``Delta``.

    ``|A| = scale*Delta/g`` and ``|B| = scale*delta/g`` with ``g = gcd``; A gets
    ids ``0..|A|-1``.  Built by random stub matching with rejection.
    """
    if not 1 <= delta < Delta:
        raise GenerationError(f"need 1 <= delta < Delta, got ({delta}, {Delta})")
    if scale < 1:
        raise GenerationError("scale must be positive")
    g0 = gcd(delta, Delta)
    na, nb = scale * Delta // g0, scale * delta // g0
    rng = random.Random(seed)
    a_stubs = [i for i in range(na) for _ in range(delta)]
    b_stubs = [na + j for j in range(nb) for _ in range(Delta)]
    for _ in range(max_tries):
        rng.shuffle(b_stubs)
        pairs = list(zip(a_stubs, b_stubs))
        if len(set(pairs)) != len(pairs):
            continue
        g = Graph(na + nb, pairs)
        if is_connected(g):
            return g
    raise GenerationError(f"no simple connected ({delta},{Delta})-biregular graph at scale "
                          f"{scale} after {max_tries} tries; increase the scale")


def random_cubic(n: int, seed: int = 0, max_tries: int = 100000) -> Graph:
    """Connected simple cubic graph from the pairing model with rejection."""
    if n % 2 or n < 4:
        raise GenerationError(f"cubic graphs need even n >= 4, got {n}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if any(u == v for u, v in pairs):
            continue
        keyed = {(min(u, v), max(u, v)) for u, v in pairs}
        if len(keyed) != len(pairs):
            continue
        g = Graph(n, keyed)
        if is_connected(g):
            return g
    raise GenerationError(f"pairing model failed for n={n}")


def enumerate_cubic_connected(n: int) -> Iterator[Graph]:
    """Connected cubic graphs on ``n`` vertices in breadth-first normal form.

    Each graph is labeled by a breadth-first search from vertex 0 that gives
    the new neighbours of every vertex consecutive ids.  Every isomorphism
    class appears, once per distinct such labeling.
    """
    if n % 2 or not 4 <= n <= 12:
        raise GenerationError(f"enumeration supports even n in 4..12, got {n}")
    return _bfs_normal_cubic(n)


def _bfs_normal_cubic(n: int) -> Iterator[Graph]:
    adj: list[list[int]] = [[] for _ in range(n)]

    def rec(v: int, nxt: int) -> Iterator[Graph]:
        if v == n:
            if nxt == n:
                yield Graph._trusted([sorted(row) for row in adj])
            return
        if v >= nxt:
            return
        need = 3 - len(adj[v])
        cands = [w for w in range(v + 1, nxt) if len(adj[w]) < 3 and w not in adj[v]]
        for j in range(min(need, len(cands)), -1, -1):
            fresh = need - j
            if nxt + fresh > n:
                continue
            for old in itertools.combinations(cands, j):
                new = list(old) + list(range(nxt, nxt + fresh))
                for w in new:
                    adj[v].append(w)
                    adj[w].append(v)
                yield from rec(v + 1, nxt + fresh)
                for w in new:
                    adj[v].pop()
                    adj[w].remove(v)

    yield from rec(0, 1)


# ------------------------------------------------------------ specials

@dataclass(frozen=True)
class ComposeSpec:
    """Bipartite core plus bubbles to hang from its deficient I0 vertices.

    ``attachment[i]`` is the I0 vertex that bubble ``i`` is bridged to; by
    default slots are filled in increasing vertex order.
    """

    core: Graph
    I0: tuple[int, ...]
    R0: tuple[int, ...]
    bubbles: tuple[str | int, ...] = ()
    bubble_seeds: tuple[int, ...] = ()
    attachment: tuple[int, ...] | None = field(default=None)

    def slots(self) -> list[int]:
        return [u for u in sorted(self.I0) for _ in range(3 - self.core.degree(u))]

    def problems(self) -> list[str]:
        bad = []
        i0, r0 = set(self.I0), set(self.R0)
        if not self.core.n or i0 & r0 or i0 | r0 != set(range(self.core.n)):
            bad.append("I0 and R0 must partition a non-empty core")
            return bad
        if not is_connected(self.core):
            bad.append("core is not connected")
        if any((u in i0) == (v in i0) for u, v in self.core.edges()):
            bad.append("core edge inside one side")
        if any(self.core.degree(v) != 3 for v in r0):
            bad.append("every R0 vertex needs degree 3 in the core")
        if any(self.core.degree(u) > 3 for u in i0):
            bad.append("I0 degree above 3")
        if len(self.slots()) != len(self.bubbles):
            bad.append(f"{len(self.slots())} deficiency slots but {len(self.bubbles)} bubbles")
        if self.attachment is not None and Counter(self.attachment) != Counter(self.slots()):
            bad.append("attachment is not a bijection onto the deficiency slots")
        if self.bubble_seeds and len(self.bubble_seeds) != len(self.bubbles):
            bad.append("one seed per bubble expected")
        return bad


def compose_special(spec: ComposeSpec, seed: int = 0, relabel: bool = False
                    ) -> tuple[Graph, SpecialDecomposition]:
    """Glue bubbles onto a bipartite core; returns the graph and its decomposition.

    With ``relabel`` the vertex ids are shuffled (seeded) so nothing downstream
    can rely on the construction order.
    """
    bad = spec.problems()
    if bad:
        raise GenerationError("invalid compose spec: " + "; ".join(bad))
    attach = list(spec.attachment) if spec.attachment is not None else spec.slots()
    seeds = spec.bubble_seeds or tuple(range(len(spec.bubbles)))
    edges = list(spec.core.edges())
    n = spec.core.n
    certs: list[BubbleCertificate] = []
    bridges = []
    for b_spec, b_seed, slot in zip(spec.bubbles, seeds, attach):
        bg, bc = generate_bubble(b_spec, b_seed)
        if not is_two_connected(bg):
            raise GenerationError(f"bubble {b_spec!r} is not 2-connected")
        edges.extend((u + n, v + n) for u, v in bg.edges())
        certs.append(bc.relabel({v: v + n for v in range(bg.n)}))
        bridges.append((bc.contact + n, slot))
        edges.append((bc.contact + n, slot))
        n += bg.n
    g = Graph(n, edges)
    d = SpecialDecomposition(tuple(range(spec.core.n)), tuple(sorted(spec.I0)),
                             tuple(sorted(spec.R0)), tuple(certs), tuple(bridges))
    if relabel:
        perm = list(range(n))
        random.Random(seed).shuffle(perm)
        g = Graph(n, [(perm[u], perm[v]) for u, v in edges])
        d = d.relabel(perm)
    problems = verify_special(g, d)
    if problems:
        raise GenerationError("composition is not special: " + "; ".join(problems))
    return g, d


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def k23_core_spec() -> ComposeSpec:
    """K_{2,3} core carrying two 5-vertex bubbles and one 7-vertex bubble (22 vertices)."""
    core = complete_bipartite(3, 2)
    return ComposeSpec(core, (0, 1, 2), (3, 4), ("k4-subdivision", "k4-subdivision", "order7-b"))


def random_core(rng: random.Random, max_r: int = 5, max_tries: int = 500
                ) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    """Random connected bipartite core: R0 of degree 3, I0 of degree 1..3."""
    for _ in range(max_tries):
        r = rng.randint(0, max_r)
        if r == 0:
            return Graph(1), (0,), ()
        i = rng.randint(max(r, 3), r + 2)
        if i > 3 * r:
            continue
        degs = [1] * i
        for _ in range(3 * r - i):
            choices = [u for u in range(i) if degs[u] < 3]
            degs[rng.choice(choices)] += 1
        left = [u for u in range(i) for _ in range(degs[u])]
        right = [i + j for j in range(r) for _ in range(3)]
        rng.shuffle(right)
        pairs = list(zip(left, right))
        if len(set(pairs)) != len(pairs):
            continue
        g = Graph(i + r, pairs)
        if is_connected(g):
            return g, tuple(range(i)), tuple(range(i, i + r))
    raise GenerationError("could not draw a connected core")


def random_compose_spec(seed: int, max_r: int = 5, bubble_orders: Sequence[int] = (5, 7, 9, 11),
                        catalog_share: float = 0.5) -> ComposeSpec:
    """Seeded random core plus a mix of catalog and random 2-connected bubbles."""
    rng = random.Random(seed)
    core, I0, R0 = random_core(rng, max_r)
    ell = sum(3 - core.degree(u) for u in I0)
    bubbles: list[str | int] = []
    for _ in range(ell):
        if rng.random() < catalog_share:
            bubbles.append(rng.choice(TWO_CONNECTED_CATALOG))
        else:
            bubbles.append(rng.choice(list(bubble_orders)))
    seeds = tuple(rng.randrange(2**31) for _ in range(ell))
    slots = [u for u in I0 for _ in range(3 - core.degree(u))]
    rng.shuffle(slots)
    return ComposeSpec(core, I0, R0, tuple(bubbles), seeds, tuple(slots))


def random_special(seed: int, **kwargs) -> tuple[Graph, SpecialDecomposition]:
    return compose_special(random_compose_spec(seed, **kwargs), seed=seed, relabel=True)


def double_edge_swap(g: Graph, rng: random.Random, tries: int = 100) -> Graph:
    """Degree-preserving switch ``ab, cd -> ac, bd``; keeps the graph simple."""
    edges = g.edges()
    for _ in range(tries):
        (a, b), (c, d) = rng.sample(edges, 2)
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or g.has_edge(a, c) or g.has_edge(b, d):
            continue
        keep = [e for e in edges if e not in ((min(a, b), max(a, b)), (min(c, d), max(c, d)))]
        return Graph(g.n, keep + [(a, c), (b, d)])
    raise GraphError("no valid double-edge swap found")

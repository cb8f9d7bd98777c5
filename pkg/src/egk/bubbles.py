"""Bubbles: near-cubic graphs whose one inner edge sits on the larger side.

A bubble is a graph whose vertices split into ``I`` and ``R`` such that every
vertex has degree 3 except one contact vertex ``z`` of degree 2, ``I`` is
independent, ``z`` is in ``R`` and exactly one edge ``xy`` runs inside ``R``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from egk.graph import (Bipartition, Graph, GraphError, block_cut_tree, connected_components,
                       induced_subgraph, is_connected, is_two_connected, two_coloring)
from egk.matching import HallViolator, Matching, saturating_matching


class NotABubbleError(ValueError):
    pass


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class BubbleCertificate:
    contact: int
    I: tuple[int, ...]
    R: tuple[int, ...]
    xy: tuple[int, int]

    @classmethod
    def of(cls, contact: int, I, R, xy) -> BubbleCertificate:
        x, y = xy
        return cls(contact, tuple(sorted(I)), tuple(sorted(R)), (min(x, y), max(x, y)))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.I + self.R))

    def relabel(self, mapping) -> BubbleCertificate:
        x, y = self.xy
        return BubbleCertificate.of(mapping[self.contact], [mapping[v] for v in self.I],
                                    [mapping[v] for v in self.R], (mapping[x], mapping[y]))

    def to_dict(self) -> dict:
        return {"contact": self.contact, "I": list(self.I), "R": list(self.R), "xy": list(self.xy)}

    @classmethod
    def from_dict(cls, d: dict) -> BubbleCertificate:
        return cls.of(int(d["contact"]), d["I"], d["R"], tuple(d["xy"]))


def bubble_violations(g: Graph, cert: BubbleCertificate) -> list[str]:
    """Violated bubble clauses for the induced subgraph ``G[I | R]``."""
    bad = []
    I, R = set(cert.I), set(cert.R)
    verts = I | R
    if any(not 0 <= v < g.n for v in verts | {cert.contact, *cert.xy}):
        return ["certificate references vertices outside the graph"]
    if len(I) != len(cert.I) or len(R) != len(cert.R):
        bad.append("I or R lists a vertex twice")
    if I & R:
        bad.append("I and R overlap")
    if cert.contact not in R:
        bad.append("contact vertex is not in R")
    for v in sorted(verts):
        d = sum(1 for w in g.adj[v] if w in verts)
        want = 2 if v == cert.contact else 3
        if d != want:
            bad.append(f"vertex {v} has degree {d}, expected {want}")
            break
    for v in sorted(I):
        if any(w in I for w in g.adj[v]):
            bad.append(f"I is not independent (vertex {v})")
            break
    inner = [(u, w) for u in sorted(R) for w in g.adj[u] if u < w and w in R]
    if len(inner) != 1:
        bad.append(f"R spans {len(inner)} edges, expected exactly one")
    elif inner[0] != cert.xy:
        bad.append(f"the edge inside R is {inner[0]}, certificate says {cert.xy}")
    if len(R) != len(I) + 1:
        bad.append(f"|R| = {len(R)} but |I| + 1 = {len(I) + 1}")
    if not bad:
        sub, _, _ = induced_subgraph(g, verts)
        if isinstance(two_coloring(sub), Bipartition):
            bad.append("bubble is bipartite")
    return bad


def verify_bubble(g: Graph, cert: BubbleCertificate) -> list[str]:
    """Empty list iff ``cert`` shows that ``g`` itself is a bubble."""
    bad = bubble_violations(g, cert)
    if set(cert.I) | set(cert.R) != set(range(g.n)):
        bad.insert(0, "I and R do not cover the vertex set")
    return bad


def recognize_bubble(g: Graph) -> BubbleCertificate | None:
    """Find a bubble certificate for a connected graph, if one exists.

    For each edge ``xy`` in sorted order, ``g - xy`` must be bipartite with
    ``x``, ``y`` and the degree-2 vertex on the same side; that side is ``R``.
    """
    if not is_connected(g):
        raise GraphError("recognize_bubble needs a connected graph")
    degs = g.degrees()
    low = [v for v, d in enumerate(degs) if d != 3]
    if len(low) != 1 or degs[low[0]] != 2:
        return None
    z = low[0]
    for x, y in g.edges():
        adj = [list(row) for row in g.adj]
        adj[x].remove(y)
        adj[y].remove(x)
        col = two_coloring(Graph._trusted(adj))
        if not isinstance(col, Bipartition):
            continue
        side = set(col.side_a)
        if (x in side) == (y in side) == (z in side):
            R = side if x in side else set(col.side_b)
            I = set(range(g.n)) - R
            return BubbleCertificate.of(z, I, R, (x, y))
    return None


def bubble_matching_avoiding(g: Graph, cert: BubbleCertificate, u: int) -> Matching:
    """Matching of ``G - u`` over I-R edges that saturates ``I``.

    ``u`` must be the contact or an endpoint of the edge inside ``R``.
    """
    if u not in (cert.contact, *cert.xy):
        raise ValueError(f"vertex {u} is neither the contact nor an end of {cert.xy}")
    bad = bubble_violations(g, cert)
    if bad:
        raise NotABubbleError("; ".join(bad))
    I = set(cert.I)
    R = set(cert.R) - {u}
    edges = [(a, b) for a in sorted(I) for b in g.adj[a] if b in R]
    ids = sorted(I | R)
    local = {v: i for i, v in enumerate(ids)}
    h = Graph(len(ids), [(local[a], local[b]) for a, b in edges])
    bip = Bipartition(tuple(local[a] for a in sorted(I)), tuple(local[b] for b in sorted(R)))
    res = saturating_matching(h, bip, "A")
    if isinstance(res, HallViolator):
        raise NotABubbleError(f"no I-saturating matching avoids {u}: Hall set "
                              f"{[ids[i] for i in res.deficient_set]}")
    return Matching.of((ids[a], ids[b]) for a, b in res.edges)


def extract_sub_bubble(g: Graph, cert: BubbleCertificate) -> BubbleCertificate | None:
    """A proper induced sub-bubble with ``I' <= I`` and ``R' <= R``.

    Returns ``None`` when the bubble is 2-connected.  The bubble is
    ``G[I | R]``, so this also works on bubbles embedded in a host graph.
    """
    bad = bubble_violations(g, cert)
    if bad:
        raise NotABubbleError("; ".join(bad))
    sub, old_to_new, new_to_old = induced_subgraph(g, cert.vertices)
    I = set(cert.I)
    comps = connected_components(sub)
    x, y = cert.xy
    if len(comps) > 1:
        comp = next(c for c in comps if old_to_new[x] in c)
        verts = {new_to_old[v] for v in comp}
        out = BubbleCertificate.of(cert.contact, verts & I, verts - I, cert.xy)
    else:
        if is_two_connected(sub):
            return None
        a, b = block_cut_tree(sub).bridges()[0]
        a, b = new_to_old[a], new_to_old[b]
        if a in I and b not in I:
            u, v = b, a
        elif b in I and a not in I:
            u, v = a, b
        else:
            raise AssertionError(f"bridge {a}-{b} joins two R vertices of a bubble")
        adj = [list(row) for row in sub.adj]
        adj[old_to_new[u]].remove(old_to_new[v])
        adj[old_to_new[v]].remove(old_to_new[u])
        split = connected_components(Graph._trusted(adj))
        comp = next(c for c in split if old_to_new[u] in c)
        verts = {new_to_old[w] for w in comp}
        out = BubbleCertificate.of(u, verts & I, verts - I, cert.xy)
    bad = bubble_violations(g, out)
    if bad:
        raise AssertionError("extracted sub-bubble fails verification: " + "; ".join(bad))
    return out


# ---------------------------------------------------------------- catalog

def _k4_subdivision():
    edges = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    return Graph(5, edges), BubbleCertificate.of(0, [1, 2], [0, 3, 4], (3, 4))


def _order7_a():
    edges = [(0, 1), (0, 3), (2, 3), (1, 2), (1, 4), (4, 6), (5, 6), (0, 5), (2, 5), (3, 4)]
    return Graph(7, edges), BubbleCertificate.of(6, [0, 2, 4], [1, 3, 5, 6], (5, 6))


def _order9():
    edges = [(5, 7), (1, 7), (1, 4), (2, 4), (0, 2), (0, 6), (3, 6), (3, 8), (5, 8),
             (5, 6), (0, 7), (1, 2), (3, 4)]
    return Graph(9, edges), BubbleCertificate.of(8, [0, 1, 3, 5], [2, 4, 6, 7, 8], (2, 4))


def _nested_11():
    edges = [(2, 4), (3, 4), (1, 3), (0, 1), (0, 2), (1, 2), (0, 3),
             (4, 5), (8, 9), (5, 7), (6, 7), (5, 9), (6, 9), (7, 8), (6, 10), (8, 10)]
    return Graph(11, edges), BubbleCertificate.of(10, [2, 3, 5, 6, 8], [0, 1, 4, 7, 9, 10], (0, 1))


def _order7_b():
    # contact 0; top row 0..3 (R), bottom row 4..6 (I)
    edges = [(0, 1), (0, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 2), (5, 1), (1, 6), (4, 3)]
    return Graph(7, edges), BubbleCertificate.of(0, [4, 5, 6], [0, 1, 2, 3], (0, 1))


CATALOG = {
    "k4-subdivision": _k4_subdivision,
    "order7-a": _order7_a,
    "order9": _order9,
    "nested11": _nested_11,
    "order7-b": _order7_b,
}
TWO_CONNECTED_CATALOG = ("k4-subdivision", "order7-a", "order9", "order7-b")


def _pair_stubs(left_deg: list[int], right_deg: list[int], rng: random.Random,
                tries: int) -> list[tuple[int, int]] | None:
    """Random simple bipartite graph with the given degrees (stub matching)."""
    left = [i for i, d in enumerate(left_deg) for _ in range(d)]
    right = [j for j, d in enumerate(right_deg) for _ in range(d)]
    if len(left) != len(right):
        raise GenerationError("degree sums differ")
    for _ in range(tries):
        rng.shuffle(right)
        pairs = list(zip(left, right))
        if len(set(pairs)) == len(pairs):
            return pairs
    return None


def random_bubble(n: int, seed: int = 0, two_connected: bool = True,
                  max_tries: int = 20000) -> tuple[Graph, BubbleCertificate]:
    """Random bubble on ``n`` vertices (odd, at least 5)."""
    if n % 2 == 0:
        raise GenerationError(f"bubbles have odd order; n={n} requested")
    if n < 5:
        raise GenerationError(f"the smallest bubble has 5 vertices; n={n} requested")
    rng = random.Random(seed)
    p = (n - 1) // 2
    for _ in range(max_tries):
        # R = 0..p (contact 0), I = p+1..2p
        if p >= 3 and rng.random() < 0.5:
            x, y = 0, 1            # contact is an end of the inner edge
            rdeg = [1, 2] + [3] * (p - 1)
        else:
            x, y = 1, 2
            rdeg = [2, 2, 2] + [3] * (p - 2)
        pairs = _pair_stubs([3] * p, rdeg, rng, 50)
        if pairs is None:
            continue
        edges = [(x, y)] + [(p + 1 + i, r) for i, r in pairs]
        perm = list(range(n))
        rng.shuffle(perm)
        g = Graph(n, [(perm[a], perm[b]) for a, b in edges])
        if not is_connected(g):
            continue
        if two_connected and not is_two_connected(g):
            continue
        cert = BubbleCertificate.of(perm[0], [perm[p + 1 + i] for i in range(p)],
                                    [perm[r] for r in range(p + 1)], (perm[x], perm[y]))
        return g, cert
    raise GenerationError(f"no bubble found on {n} vertices after {max_tries} tries")


def nest_bubble(inner: tuple[Graph, BubbleCertificate], frame: int = 3, seed: int = 0,
                max_tries: int = 20000) -> tuple[Graph, BubbleCertificate]:
    """Grow a larger bubble that contains ``inner`` behind a bridge.

    A bipartite frame with ``frame`` vertices per side gets a new contact of
    degree 2 and one I-slot of degree 2; the slot is joined to the inner
    contact.  The result is connected but not 2-connected.
    """
    if frame < 3:
        raise GenerationError("a frame needs at least 3 vertices per side")
    g_in, c_in = inner
    rng = random.Random(seed)
    q = frame
    for _ in range(max_tries):
        # frame I = 0..q-1 (slot 0), frame R = q..2q-1 (contact q)
        pairs = _pair_stubs([2] + [3] * (q - 1), [2] + [3] * (q - 1), rng, 50)
        if pairs is None:
            continue
        off = 2 * q
        edges = [(i, q + j) for i, j in pairs]
        edges += [(a + off, b + off) for a, b in g_in.edges()]
        edges.append((0, c_in.contact + off))
        n = off + g_in.n
        perm = list(range(n))
        rng.shuffle(perm)
        g = Graph(n, [(perm[a], perm[b]) for a, b in edges])
        if not is_connected(g):
            continue
        I = [perm[i] for i in range(q)] + [perm[v + off] for v in c_in.I]
        R = [perm[q + j] for j in range(q)] + [perm[v + off] for v in c_in.R]
        x, y = c_in.xy
        cert = BubbleCertificate.of(perm[q], I, R, (perm[x + off], perm[y + off]))
        if verify_bubble(g, cert):
            continue
        return g, cert
    raise GenerationError("could not grow a nested bubble")


def generate_bubble(spec: str | int, seed: int = 0) -> tuple[Graph, BubbleCertificate]:
    """Catalog bubble by id, or a random 2-connected bubble of order ``spec``."""
    if isinstance(spec, str):
        if spec.lstrip("-").isdigit():
            spec = int(spec)
        elif spec in CATALOG:
            return CATALOG[spec]()
        else:
            raise GenerationError(f"unknown bubble catalog id {spec!r}; "
                                  f"known: {', '.join(CATALOG)}")
    return random_bubble(int(spec), seed)

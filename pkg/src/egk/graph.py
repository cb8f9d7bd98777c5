"""Simple undirected graphs and the structural primitives everything else uses.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` is immutable once
built, so it can be shared freely between threads and worker processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.message = message
        self.offset = offset


class Graph:
    """Immutable simple graph stored as sorted adjacency tuples."""

    __slots__ = ("n", "adj", "m", "_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.m = m
        self._sets = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> Graph:
        """Build from per-vertex neighbor lists; symmetry is checked."""
        n = len(adj)
        edges = []
        for u, row in enumerate(adj):
            for v in row:
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if u < v:
                    edges.append((u, v))
                elif u == v:
                    raise GraphError(f"self-loop at vertex {u}")
        g = cls(n, edges)
        for u, row in enumerate(adj):
            if tuple(sorted(set(row))) != g.adj[u] or len(set(row)) != len(row):
                raise GraphError(f"adjacency of vertex {u} is not symmetric or has repeats")
        return g

    @classmethod
    def _trusted(cls, adj: Sequence[Sequence[int]]) -> Graph:
        # caller guarantees sorted, symmetric, simple rows
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(tuple(row) for row in adj)
        g.m = sum(len(row) for row in adj) // 2
        g._sets = None
        return g

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if self._sets is None:
            self._sets = tuple(frozenset(row) for row in self.adj)
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adj]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------- graph6

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"n={n} exceeds the graph6 limit")


def serialize_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g._sets[j] if g._sets is not None else set(g.adj[j])
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    An optional ``>>graph6<<`` header and a trailing newline are accepted.
    Anything else that does not belong to the encoding raises
    :class:`Graph6Error` carrying the offending byte offset.
    """
    s = text
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    s = s.rstrip("\n").rstrip("\r")
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable graph6 range", base + i)

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise Graph6Error("truncated 36-bit vertex count", base + len(s))
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 8
        if n < 258048:
            raise Graph6Error("non-canonical vertex count encoding", base)
    else:
        if len(s) < 4:
            raise Graph6Error("truncated 18-bit vertex count", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
        if n < 63:
            raise Graph6Error("non-canonical vertex count encoding", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, found {len(body)}", base + len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph6 data", base + pos + nbytes)

    adj: list[list[int]] = [[] for _ in range(n)]
    k = 0
    i, j = 0, 1
    for b, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if k >= nbits:
                if bit:
                    raise Graph6Error("non-zero padding bit", base + pos + b)
                continue
            if bit:
                adj[i].append(j)
                adj[j].append(i)
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    for row in adj:
        row.sort()
    return Graph._trusted(adj)


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse a multi-line graph6 corpus, skipping blank lines."""
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line.strip()))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.message}", exc.offset) from None
    return graphs


# ------------------------------------------------------------- edge list

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"``."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list: missing 'n m' header")
    head = lines[0].split()
    if len(head) != 2 or not all(tok.lstrip("-").isdigit() for tok in head):
        raise GraphError(f"bad header {lines[0]!r}, expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise GraphError(f"bad header {lines[0]!r}: negative count")
    if len(lines) - 1 != m:
        raise GraphError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for lineno, ln in enumerate(lines[1:], 2):
        toks = ln.split()
        if len(toks) != 2 or not all(tok.lstrip("-").isdigit() for tok in toks):
            raise GraphError(f"line {lineno}: expected 'u v', got {ln!r}")
        u, v = int(toks[0]), int(toks[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: vertex out of range in {ln!r}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"duplicate edge: {exc}") from None


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ------------------------------------------------------- basic structure

def degree_profile(g: Graph) -> tuple[int, int, list[int]]:
    """Return ``(min degree, max degree, degrees)``."""
    if g.n == 0:
        raise GraphError("degree profile of the empty graph is undefined")
    degs = g.degrees()
    return min(degs), max(degs), degs


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of a graph.

    In every component the side holding the smallest vertex is ``side_a``.
    """

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def contains(self, g: Graph) -> bool:
        """True iff every edge of ``g`` crosses from one side to the other."""
        a, b = set(self.side_a), set(self.side_b)
        if a & b:
            return False
        return all((u in a and v in b) or (u in b and v in a) for u, v in g.edges())


@dataclass(frozen=True)
class OddCycle:
    """Witness of non-bipartiteness: consecutive vertices of an odd cycle."""

    vertices: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        c = self.vertices
        if len(c) % 2 == 0 or len(c) < 3 or len(set(c)) != len(c):
            return False
        return all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def two_coloring(g: Graph) -> Bipartition | OddCycle:
    """BFS 2-coloring; returns an odd cycle when none exists."""
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return OddCycle(_tree_cycle(u, w, parent, depth))
    a = tuple(v for v in range(g.n) if color[v] == 0)
    b = tuple(v for v in range(g.n) if color[v] == 1)
    return Bipartition(a, b)


def _tree_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [w]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])


def bipartition(g: Graph) -> Bipartition | None:
    res = two_coloring(g)
    return res if isinstance(res, Bipartition) else None


# ------------------------------------------------------- block-cut tree

@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def is_bridge(self) -> bool:
        return len(self.vertices) == 2


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    membership: tuple[tuple[int, ...], ...] = field(repr=False)

    def bridges(self) -> list[tuple[int, int]]:
        return [b.edges[0] for b in self.blocks if b.is_bridge]

    def leaf_blocks(self) -> list[int]:
        return [i for i, b in enumerate(self.blocks)
                if sum(v in self.cut_vertices for v in b.vertices) <= 1]


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Biconnected decomposition (iterative Hopcroft-Tarjan on an edge stack)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    raw_blocks: list[list[tuple[int, int]]] = []
    for root in range(n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        # frames: (vertex, parent, next neighbor index)
        frames = [[root, -1, 0]]
        while frames:
            frame = frames[-1]
            u, p, i = frame
            nbrs = g.adj[u]
            if i < len(nbrs):
                frame[2] = i + 1
                w = nbrs[i]
                if disc[w] == -1:
                    estack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append([w, u, 0])
                elif w != p and disc[w] < disc[u]:
                    estack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
                continue
            frames.pop()
            if p == -1:
                continue
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                block = []
                while True:
                    e = estack.pop()
                    block.append(e)
                    if e == (p, u):
                        break
                raw_blocks.append(block)

    blocks = []
    for edges in raw_blocks:
        es = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
        vs = tuple(sorted({x for e in es for x in e}))
        blocks.append(Block(vs, es))
    blocks.sort(key=lambda b: b.vertices)
    member: list[list[int]] = [[] for _ in range(n)]
    for i, b in enumerate(blocks):
        for v in b.vertices:
            member[v].append(i)
    cuts = frozenset(v for v in range(n) if len(member[v]) >= 2)
    return BlockCutTree(tuple(blocks), cuts, tuple(tuple(x) for x in member))


def bridges(g: Graph) -> list[tuple[int, int]]:
    return block_cut_tree(g).bridges()


def is_two_connected(g: Graph) -> bool:
    """2-connected in the block sense: connected, n >= 3, no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return len(block_cut_tree(g).blocks) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int], list[int]]:
    """Return ``(G[s], old->new, new->old)``; new ids follow increasing old ids."""
    new_to_old = sorted(set(vertices))
    for v in new_to_old:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    old_to_new = {v: i for i, v in enumerate(new_to_old)}
    adj = [[old_to_new[w] for w in g.adj[v] if w in old_to_new] for v in new_to_old]
    return Graph._trusted(adj), old_to_new, new_to_old


def remove_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int], list[int]]:
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[list[int]] = []
    off = 0
    for h in graphs:
        adj.extend([w + off for w in row] for row in h.adj)
        off += h.n
    return Graph._trusted(adj)

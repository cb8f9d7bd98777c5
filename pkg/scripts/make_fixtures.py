"""Regenerate tests/fixtures/*.g6.  Needs networkx for isomorphism dedup.

    python3 scripts/make_fixtures.py [outdir]
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

import networkx as nx
import numpy as np

from egk.bubbles import CATALOG, generate_bubble, nest_bubble, random_bubble
from egk.generators import (_bfs_normal_cubic, compose_special, k23_core_spec, generate_biregular,
                            random_special)
from egk.graph import Graph, serialize_graph6


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), h.edges())


def _bfs_layers(g: Graph, s: int) -> tuple[int, ...]:
    seen = {s}
    frontier = [s]
    counts = []
    while frontier:
        counts.append(len(frontier))
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(counts)


def invariant(g: Graph) -> tuple:
    """Isomorphism invariant that separates regular graphs (colour refinement cannot)."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    spectrum = tuple(np.round(np.linalg.eigvalsh(a), 6) + 0.0)
    return tuple(sorted(_bfs_layers(g, s) for s in range(g.n))), spectrum


def iso_classes(graphs) -> list[Graph]:
    buckets: dict[str, list[tuple[Graph, nx.Graph]]] = {}
    reps = []
    for g in graphs:
        h = to_nx(g)
        key = invariant(g)
        bucket = buckets.setdefault(key, [])
        if any(nx.vf2pp_is_isomorphic(h, other) for _, other in bucket):
            continue
        bucket.append((g, h))
        reps.append(g)
    return reps


def named() -> list[Graph]:
    gs = [nx.petersen_graph(), nx.star_graph(3), nx.complete_graph(3), nx.cycle_graph(5),
          nx.complete_graph(4), nx.complete_bipartite_graph(3, 3), nx.complete_graph(5),
          nx.path_graph(4), nx.hypercube_graph(3), nx.heawood_graph(), nx.dodecahedral_graph(),
          nx.moebius_kantor_graph(), nx.frucht_graph(), nx.complete_bipartite_graph(2, 5),
          nx.empty_graph(1), nx.empty_graph(0), nx.empty_graph(3)]
    return [from_nx(h) for h in gs]


def random_small(count: int = 400, seed: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 18)
        p = rng.uniform(0.1, 0.6)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        out.append(Graph(n, edges))
    return out


def bubbles() -> list[Graph]:
    out = [generate_bubble(k)[0] for k in CATALOG]
    for n in range(5, 22, 2):
        for s in range(3):
            out.append(random_bubble(n, s)[0])
            if n >= 7:
                out.append(random_bubble(n, s, two_connected=False)[0])
    inner = generate_bubble("k4-subdivision")
    out.append(nest_bubble(inner, 3, seed=0)[0])
    return out


def specials(count: int = 40) -> list[Graph]:
    out = [compose_special(k23_core_spec())[0]]
    out += [random_special(s, max_r=3)[0] for s in range(count)]
    return out


def biregular() -> list[Graph]:
    # with delta = 1 only the star is connected, so scale stays 1
    params = [(1, 2, 1), (1, 3, 1), (2, 3, 1), (2, 3, 2), (2, 4, 2), (3, 4, 1), (3, 4, 2)]
    return [generate_biregular(d, D, s, seed) for d, D, s in params for seed in range(2)]


def write(path: Path, graphs) -> None:
    path.write_text("".join(serialize_graph6(g) + "\n" for g in graphs))
    print(f"{path}: {len(graphs)} graphs")


def main() -> None:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
    out.mkdir(parents=True, exist_ok=True)
    write(out / "named.g6", named())
    write(out / "random_small.g6", random_small())
    write(out / "bubbles.g6", bubbles())
    write(out / "specials.g6", specials())
    write(out / "biregular.g6", biregular())
    write(out / "cubic14.g6", iso_classes(_bfs_normal_cubic(14)))


if __name__ == "__main__":
    main()

"""End-to-end acceptance checks, one per criterion.

Each check records a PASS/FAIL line that is printed in the pytest terminal
summary.  Running this file directly prints the same lines:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from conftest import FIXTURES, cycle, fixture_graphs, fixture_lines, from_nx, to_nx  # noqa: E402
from egk.bubbles import (CATALOG, bubble_matching_avoiding, extract_sub_bubble, generate_bubble,  # noqa: E402
                         nest_bubble, random_bubble, verify_bubble)
from egk.exact import alpha_enumerate, alpha_exact, mu_exact, verify_independent, verify_matching  # noqa: E402
from egk.generators import (compose_special, enumerate_cubic_connected, k23_core_spec,  # noqa: E402
                            graph_from_edge_mask, random_compose_spec)
from egk.graph import Graph, is_two_connected, parse_graph6, remove_vertex, serialize_graph6  # noqa: E402
from egk.kernels import census  # noqa: E402
from egk.matching import matching_number  # noqa: E402
from egk.recognition import (BiregularCertificate, build_witnesses, check_inequality,  # noqa: E402
                             is_extremal, recognize_biregular_extremal, recognize_special,
                             verify_special, verify_witness_pair)

RESULTS: list[str] = []
CHUNK = 1 << 16
RANDOM_GRAPHS = 10_000


def record(number: int, title: str, check) -> None:
    start = time.perf_counter()
    try:
        detail = check()
    except BaseException as exc:
        RESULTS.append(f"criterion {number} {title}: FAIL ({exc})")
        raise
    took = time.perf_counter() - start
    RESULTS.append(f"criterion {number} {title}: PASS ({detail}; {took:.1f}s)")


def random_graphs(seed: int, max_n: int = 16):
    rng = random.Random(seed)
    while True:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.05, 0.9)
        yield Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def _census_rows(max_n: int = 7):
    """(n, mask, dmin, dmax, alpha, mu) for every connected graph with 2..max_n vertices."""
    for n in range(2, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        for lo in range(0, total, CHUNK):
            hi = min(total, lo + CHUNK)
            conn, dmin, dmax, alpha, mu = (np.asarray(x) for x in census(n, lo, hi))
            idx = np.nonzero(conn == 1)[0]
            yield n, lo + idx, dmin[idx], dmax[idx], alpha[idx], mu[idx]


# ------------------------------------------------------------ criteria 1, 2

def inequality_and_biregular():
    graphs = violations = irregular = mismatches = 0
    for n, masks, dmin, dmax, alpha, mu in _census_rows():
        graphs += len(masks)
        violations += int(np.count_nonzero(dmin * alpha > dmax * mu))
        for k in np.nonzero(dmin < dmax)[0]:
            irregular += 1
            tight = int(dmin[k]) * int(alpha[k]) == int(dmax[k]) * int(mu[k])
            cert = recognize_biregular_extremal(graph_from_edge_mask(n, int(masks[k])))
            mismatches += tight != (cert is not None)
    rand = rand_irregular = 0
    for g in random_graphs(seed=2024):
        if g.m == 0:
            continue
        rep = check_inequality(g)       # raises on a violation
        rand += 1
        if rep.delta < rep.Delta:
            rand_irregular += 1
            mismatches += rep.tight != (recognize_biregular_extremal(g) is not None)
        if rand == RANDOM_GRAPHS:
            break
    assert violations == 0, f"{violations} census violations"
    assert mismatches == 0, f"{mismatches} biregular mismatches"
    return graphs, rand, irregular, rand_irregular


_shared: dict = {}


def _corpus_1_2():
    if "c12" not in _shared:
        _shared["c12"] = inequality_and_biregular()
    return _shared["c12"]


def test_criterion_1_inequality():
    def check():
        graphs, rand, _, _ = _corpus_1_2()
        assert rand == RANDOM_GRAPHS
        return f"{graphs} connected graphs n<=7 and {rand} random graphs n<=16, 0 violations"
    record(1, "inequality", check)


def test_criterion_2_biregular_equality():
    def check():
        _, _, census_irregular, rand_irregular = _corpus_1_2()
        return (f"{census_irregular} census and {rand_irregular} random graphs with "
                f"min degree < max degree, 0 mismatches")
    record(2, "equality iff biregular", check)


# ------------------------------------------------------------ criteria 3, 4

def _invariant(g: Graph):
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    layers = sorted(tuple(np.bincount(list(nx.single_source_shortest_path_length(to_nx(g), s).values())))
                    for s in range(g.n))
    return tuple(map(tuple, layers)), tuple(np.round(np.linalg.eigvalsh(a), 6) + 0.0)


def _classes(graphs) -> int:
    buckets: dict = {}
    count = 0
    for g in graphs:
        h = to_nx(g)
        bucket = buckets.setdefault(_invariant(g), [])
        if not any(nx.vf2pp_is_isomorphic(h, o) for o in bucket):
            bucket.append(h)
            count += 1
    return count


def _cubic_corpus():
    if "cubic" not in _shared:
        _shared["cubic"] = {n: list(enumerate_cubic_connected(n)) for n in (4, 6, 8, 10, 12)}
    return _shared["cubic"]


def test_criterion_3_cubic_special_iff_alpha_equals_mu():
    def check():
        corpus = _cubic_corpus()
        counts = {n: _classes(gs) for n, gs in corpus.items()}
        assert list(counts.values()) == [1, 2, 5, 19, 85], counts
        mismatches = specials = 0
        for gs in corpus.values():
            for g in gs:
                d = recognize_special(g)
                specials += d is not None
                mismatches += (d is not None) != (alpha_exact(g)[0] == matching_number(g))
        assert mismatches == 0, f"{mismatches} mismatches"
        total = sum(map(len, corpus.values()))
        return f"{total} labeled graphs, classes {list(counts.values())}, {specials} special"
    record(3, "cubic special iff alpha = mu", check)


def test_criterion_4_witnesses():
    def check():
        checked = 0
        graphs = [g for gs in _cubic_corpus().values() for g in gs]
        graphs += [compose_special(random_compose_spec(s), seed=s, relabel=True)[0]
                   for s in range(1000)]
        for g in graphs:
            d = recognize_special(g)
            if d is None:
                continue
            indep, m = build_witnesses(g, d)
            assert verify_witness_pair(g, indep, m) == []
            assert len(m) == matching_number(g), "witness size differs from blossom mu"
            checked += 1
        assert checked >= 1000
        return f"{checked} special graphs, witnesses verified"
    record(4, "witness pairs", check)


# -------------------------------------------------------------- criterion 5

def _bubble_corpus():
    out = [generate_bubble(k) for k in CATALOG]
    for n in range(5, 22, 2):
        for seed in range(4):
            out.append(random_bubble(n, seed))
            if n >= 7:
                out.append(random_bubble(n, seed, two_connected=False))
    for inner in ("k4-subdivision", "order7-a", "order9", "order7-b"):
        for frame in (3, 4, 5):
            g, c = nest_bubble(generate_bubble(inner), frame, seed=frame)
            if g.n <= 21:
                out.append((g, c))
    return out


def test_criterion_5_bubble_values():
    def check():
        corpus = _bubble_corpus()
        nested = 0
        for g, cert in corpus:
            assert verify_bubble(g, cert) == []
            half = (g.n - 1) // 2
            minus, _, _ = remove_vertex(g, cert.contact)
            got = (alpha_exact(g)[0], alpha_enumerate(minus) if minus.n <= 20 else alpha_exact(minus)[0],
                   matching_number(g), mu_exact(minus))
            assert got == (half,) * 4, f"n={g.n}: {got}"
            for u in (cert.contact, *cert.xy):
                m = bubble_matching_avoiding(g, cert, u)
                assert verify_matching(g, m) and len(m) == len(cert.I) and u not in m.vertices()
            if not is_two_connected(g):
                nested += 1
                sub = extract_sub_bubble(g, cert)
                assert sub is not None and len(sub.vertices) < g.n
        assert nested > 0
        return f"{len(corpus)} bubbles up to n={max(g.n for g, _ in corpus)}, {nested} not 2-connected"
    record(5, "bubble values and sub-bubbles", check)


# -------------------------------------------------------------- criterion 6

def test_criterion_6_stated_values():
    def check():
        for n in range(3, 21):
            v = is_extremal(cycle(n))
            assert v.verdict == "tight" and v.lhs == v.rhs == 2 * (n // 2), n
            assert check_inequality(cycle(n)).tight
        claw = from_nx(nx.star_graph(3))
        v = is_extremal(claw)
        assert v.verdict == "tight" and isinstance(v.certificate, BiregularCertificate)
        g, _ = compose_special(k23_core_spec())
        d = recognize_special(g)
        assert d is not None and verify_special(g, d) == []
        assert alpha_exact(g)[0] == matching_number(g) == 10
        return f"C3..C20 tight, claw biregular, {g.n}-vertex special graph with alpha = mu = 10"
    record(6, "stated values", check)


# -------------------------------------------------------------- criterion 7

def test_criterion_7_round_trips():
    def check():
        lines = 0
        for path in sorted(FIXTURES.glob("*.g6")):
            for line in fixture_lines(path.name):
                assert serialize_graph6(parse_graph6(line)) == line, f"{path.name}: {line}"
                lines += 1
        for seed in range(1000):
            spec = random_compose_spec(seed)
            g, truth = compose_special(spec, seed=seed, relabel=True)
            d = recognize_special(g)
            assert d is not None and d.ell == truth.ell, seed
            assert set(d.bubble_vertex_sets()) == set(truth.bubble_vertex_sets()), seed
        return f"{lines} fixture lines byte-exact, 1000 compositions recovered"
    record(7, "round trips", check)


# -------------------------------------------------------------- criterion 8

def test_criterion_8_cross_oracle():
    def check():
        mu_checked = alpha_checked = 0
        for path in sorted(FIXTURES.glob("*.g6")):
            for g in fixture_graphs(path.name):
                if g.n <= 14:
                    assert matching_number(g) == mu_exact(g), serialize_graph6(g)
                    mu_checked += 1
                if g.n <= 18:
                    size, s = alpha_exact(g)
                    assert verify_independent(g, s.vertices)
                    assert size == alpha_enumerate(g), serialize_graph6(g)
                    alpha_checked += 1
        assert mu_checked and alpha_checked
        return f"mu agreed on {mu_checked} fixtures, alpha on {alpha_checked}"
    record(8, "cross-oracle", check)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                failed += 1
    for line in sorted(RESULTS, key=lambda s: int(s.split()[1])):
        print(line)
    sys.exit(1 if failed else 0)

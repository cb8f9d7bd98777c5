import random

import networkx as nx
import pytest

from conftest import cycle, from_nx, to_nx
from egk.exact import mu_exact, verify_matching, verify_vertex_cover
from egk.graph import Bipartition, Graph, two_coloring
from egk.matching import (HallViolator, InvalidBipartitionError, Matching, NotMaximumError,
                          blossom_maximum_matching, hall_violator, hopcroft_karp, koenig_cover,
                          matching_number, saturating_matching)


def random_bipartite(rng, a, b, p):
    edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    return Graph(a + b, edges), Bipartition(tuple(range(a)), tuple(range(a, a + b)))


def test_hopcroft_karp_and_koenig_against_networkx():
    rng = random.Random(3)
    for _ in range(200):
        g, bip = random_bipartite(rng, rng.randint(1, 9), rng.randint(1, 9), rng.random())
        m = hopcroft_karp(g, bip)
        assert verify_matching(g, m)
        ref = nx.bipartite.maximum_matching(to_nx(g), top_nodes=bip.side_a)
        assert len(m) == len(ref) // 2
        cover = koenig_cover(g, bip, m)
        assert len(cover) == len(m) and verify_vertex_cover(g, cover.vertices)


def test_koenig_rejects_non_maximum_matching():
    g = from_nx(nx.path_graph(4))
    bip = Bipartition((0, 2), (1, 3))
    with pytest.raises(NotMaximumError):
        koenig_cover(g, bip, Matching.of([(1, 2)]))


def test_bad_bipartition_rejected():
    with pytest.raises(InvalidBipartitionError):
        hopcroft_karp(cycle(4), Bipartition((0, 1), (2, 3)))


def test_hall_violator_on_star():
    g = from_nx(nx.star_graph(3))
    bip = Bipartition((1, 2, 3), (0,))
    viol = hall_violator(g, bip, "A")
    assert viol is not None and viol.check(g)
    assert viol.deficient_set == (1, 2, 3) and viol.neighborhood == (0,)
    assert isinstance(saturating_matching(g, bip, "B"), Matching)


def test_hall_violator_random():
    rng = random.Random(5)
    for _ in range(300):
        g, bip = random_bipartite(rng, rng.randint(1, 8), rng.randint(1, 8), rng.random() * 0.6)
        res = saturating_matching(g, bip, "A")
        full = len(hopcroft_karp(g, bip)) == len(bip.side_a)
        assert isinstance(res, Matching) == full
        if isinstance(res, HallViolator):
            assert res.check(g)
            assert set(res.deficient_set) <= set(bip.side_a)


def test_blossom_known_values(petersen):
    assert matching_number(petersen) == 5
    assert matching_number(cycle(7)) == 3
    assert matching_number(Graph(0)) == 0
    assert matching_number(from_nx(nx.star_graph(5))) == 1


def test_blossom_against_networkx_and_exhaustive():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 14)
        p = rng.random()
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        m = blossom_maximum_matching(g)
        assert verify_matching(g, m)
        assert len(m) == mu_exact(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_bipartite_matching_equals_blossom():
    rng = random.Random(11)
    for _ in range(100):
        g, bip = random_bipartite(rng, rng.randint(1, 10), rng.randint(1, 10), rng.random())
        assert len(hopcroft_karp(g, bip)) == matching_number(g)
        assert isinstance(two_coloring(g), Bipartition)

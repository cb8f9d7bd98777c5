import random

import networkx as nx
import pytest

from conftest import cycle, from_nx, to_nx
from egk.exact import (Cancelled, OracleScaleError, alpha_enumerate, alpha_exact,
                       has_augmenting_path, mu_exact, verify_independent)
from egk.graph import Graph
from egk.matching import Matching, blossom_maximum_matching


def random_graph(rng, n, p):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.mark.parametrize("h, alpha, mu", [
    (nx.petersen_graph(), 4, 5),
    (nx.cycle_graph(5), 2, 2),
    (nx.complete_graph(5), 1, 2),
    (nx.complete_bipartite_graph(3, 3), 3, 3),
    (nx.star_graph(3), 3, 1),
    (nx.empty_graph(4), 4, 0),
])
def test_known_values(h, alpha, mu):
    g = from_nx(h)
    size, s = alpha_exact(g)
    assert size == alpha == alpha_enumerate(g)
    assert verify_independent(g, s.vertices)
    assert mu_exact(g) == mu


def test_alpha_oracles_agree_with_networkx_clique():
    rng = random.Random(2)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 16), rng.random())
        comp = nx.complement(to_nx(g))
        ref = max(len(c) for c in nx.find_cliques(comp))
        assert alpha_exact(g)[0] == alpha_enumerate(g) == ref


def test_scale_guards():
    with pytest.raises(OracleScaleError, match="oracle scale exceeded"):
        alpha_exact(cycle(41))
    with pytest.raises(OracleScaleError):
        alpha_enumerate(cycle(21))
    with pytest.raises(OracleScaleError):
        mu_exact(cycle(25))
    assert alpha_exact(cycle(41), max_n=41)[0] == 20


def test_cancellation():
    g = random_graph(random.Random(0), 38, 0.15)
    with pytest.raises(Cancelled):
        alpha_exact(g, cancel=lambda: True)


def test_augmenting_path_oracle():
    rng = random.Random(4)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 11), rng.random())
        best = blossom_maximum_matching(g)
        assert not has_augmenting_path(g, best)
        if best.edges:
            smaller = Matching(best.edges[1:])
            assert has_augmenting_path(g, smaller)

import itertools
import random

import networkx as nx
import pytest

from conftest import cycle, fixture_graphs, from_nx
from egk.exact import IndependentSet, alpha_exact
from egk.generators import (ComposeSpec, complete_bipartite, compose_special, double_edge_swap,
                            k23_core_spec, generate_biregular, random_special)
from egk.graph import Graph, GraphError, disjoint_union, is_connected
from egk.matching import matching_number
from egk.recognition import (BiregularCertificate, ProofTrace, SmallDegreeCertificate,
                             SpecialComponents, SpecialDecomposition, biregular_violation,
                             build_witnesses, check_inequality, is_extremal, proof_trace,
                             recognize_biregular_extremal, recognize_special, verify_biregular,
                             verify_special, verify_trace, verify_witness_pair)


def min_covers(g):
    """Every minimum vertex cover, by brute force."""
    for k in range(g.n + 1):
        found = [set(c) for c in itertools.combinations(range(g.n), k)
                 if all(u in c or v in c for u, v in g.edges())]
        if found:
            return found


def test_check_inequality_values(petersen):
    rep = check_inequality(petersen)
    assert (rep.lhs, rep.rhs, rep.tight) == (12, 15, False)
    rep = check_inequality(cycle(5))
    assert (rep.lhs, rep.rhs, rep.tight) == (4, 4, True)


def test_trace_on_four_cycle():
    t = proof_trace(cycle(4))
    assert (t.k, t.m, t.mu_H, t.mu_G) == (0, 4, 2, 2)
    assert verify_trace(cycle(4), t) == []


def test_trace_on_five_cycle_matches_brute_force():
    g = cycle(5)
    t = proof_trace(g)
    h = Graph(5, t.H_edges)
    covers = min_covers(h)
    # the cover of H is unique here, so k and m are forced
    assert len(covers) == 1
    cover = covers[0]
    k = len(cover & set(t.I))
    m = sum(1 for a, b in t.H_edges
            if (a in t.I and a not in cover and b in cover) or (b in t.I and b not in cover and a in cover))
    assert (t.k, t.m) == (k, m) == (2, 0)


def test_trace_on_claw():
    g = from_nx(nx.star_graph(3))
    t = proof_trace(g)
    assert (t.I, t.k, t.m) == ((1, 2, 3), 0, 3)
    assert t.chain_counts == (3, 3, 3, 3, 3)


def test_trace_rejects_non_maximum_set():
    with pytest.raises(ValueError):
        proof_trace(cycle(6), IndependentSet((0, 2)))


def test_trace_round_trip_and_tamper_detection():
    g = from_nx(nx.petersen_graph())
    t = proof_trace(g)
    assert ProofTrace.from_dict(t.to_dict()) == t
    bad = ProofTrace.from_dict(dict(t.to_dict(), k=t.k + 1))
    assert verify_trace(g, bad)


def test_trace_chains_on_random_graphs():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(2, 12)
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4])
        if any(not row for row in g.adj):
            continue
        t = proof_trace(g)
        assert verify_trace(g, t) == []
        tight = t.delta * t.alpha == t.Delta * t.mu_G
        if tight and t.delta < t.Delta:
            assert t.k == 0


def test_biregular_claw():
    g = from_nx(nx.star_graph(3))
    cert = recognize_biregular_extremal(g)
    assert cert == BiregularCertificate(1, 3, (((1, 2, 3), (0,)),))
    assert verify_biregular(g, cert) == []
    assert BiregularCertificate.from_dict(cert.to_dict()) == cert


def test_biregular_violations():
    assert "bipartite" in biregular_violation(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])).clause
    path = from_nx(nx.path_graph(4))
    assert recognize_biregular_extremal(path) is None
    with pytest.raises(GraphError):
        recognize_biregular_extremal(cycle(4))


def test_biregular_generated():
    for d, D, s in [(2, 3, 2), (1, 4, 1), (3, 5, 1)]:
        g = generate_biregular(d, D, s, seed=3)
        cert = recognize_biregular_extremal(g)
        assert cert is not None
        rep = check_inequality(g)
        assert rep.tight and rep.alpha == cert.alpha and rep.mu == cert.mu


def test_special_k33_has_no_bubbles():
    d = recognize_special(complete_bipartite(3, 3))
    assert d is not None and d.ell == 0 and d.I0 == (0, 1, 2)


def test_special_k23_core_graph():
    g, truth = compose_special(k23_core_spec())
    assert g.n == 22
    d = recognize_special(g)
    assert d is not None and d.ell == 3
    assert sorted(d.bubble_vertex_sets(), key=min) == sorted(truth.bubble_vertex_sets(), key=min)
    indep, m = build_witnesses(g, d)
    assert len(indep) == len(m) == 10 == alpha_exact(g)[0] == matching_number(g)
    assert verify_witness_pair(g, indep, m) == []


def test_single_vertex_core():
    g, _ = compose_special(ComposeSpec(Graph(1), (0,), (), ("k4-subdivision",) * 3))
    assert g.n == 16
    assert recognize_special(g).ell == 3
    assert alpha_exact(g)[0] == matching_number(g) == 7


def test_non_special_cubic(petersen):
    assert recognize_special(petersen) is None
    k4 = Graph(4, list(itertools.combinations(range(4), 2)))
    assert recognize_special(k4) is None


def test_verify_special_catches_tampering():
    g, d = compose_special(k23_core_spec())
    swapped = SpecialDecomposition(d.V0, d.R0, d.I0, d.bubbles, d.bridges)
    assert verify_special(g, swapped)
    assert SpecialDecomposition.from_dict(d.to_dict()) == d


def test_random_specials_recognized_with_relabeling():
    for seed in range(30):
        g, truth = random_special(seed)
        d = recognize_special(g)
        assert d is not None and d.ell == truth.ell
        assert set(d.bubble_vertex_sets()) == set(truth.bubble_vertex_sets())


def test_edge_swaps_keep_recognizer_and_oracle_in_step():
    rng = random.Random(17)
    checked = 0
    for seed in range(40):
        g, _ = random_special(seed, max_r=2, bubble_orders=(5, 7))
        if g.n > 40:
            continue
        for _ in range(3):
            g = double_edge_swap(g, rng)
            if not is_connected(g):
                continue
            checked += 1
            special = recognize_special(g) is not None
            assert special == (alpha_exact(g)[0] == matching_number(g))
    assert checked > 30


@pytest.mark.parametrize("g, kind", [
    (from_nx(nx.star_graph(3)), BiregularCertificate),
    (cycle(7), SmallDegreeCertificate),
    (complete_bipartite(3, 3), SpecialComponents),
])
def test_is_extremal_dispatch(g, kind):
    v = is_extremal(g)
    assert v.verdict == "tight" and isinstance(v.certificate, kind)


def test_is_extremal_other_verdicts(petersen):
    assert is_extremal(petersen).verdict == "strict"
    k5 = Graph(5, list(itertools.combinations(range(5), 2)))
    v = is_extremal(k5)
    assert (v.verdict, v.lhs, v.rhs) == ("oracle-only", 4, 8)
    assert is_extremal(Graph(0)).verdict == "not-applicable"


def test_is_extremal_disconnected_cubic():
    a, _ = compose_special(k23_core_spec())
    g = disjoint_union(complete_bipartite(3, 3), a)
    v = is_extremal(g)
    assert v.verdict == "tight" and len(v.certificate.components) == 2
    assert v.alpha == v.mu == 13
    # a triangle makes the graph irregular and non-bipartite
    assert is_extremal(disjoint_union(g, cycle(3))).verdict == "strict"


def test_cubic14_fixture_recognizer_matches_oracle():
    graphs = fixture_graphs("cubic14.g6")
    assert len(graphs) == 509
    specials = 0
    for g in graphs:
        d = recognize_special(g)
        specials += d is not None
        assert (d is not None) == (alpha_exact(g)[0] == matching_number(g))
    assert specials > 0

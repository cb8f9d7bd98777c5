"""Recognizers for graphs with  min_degree * alpha == max_degree * mu.

* ``min_degree < max_degree``: exactly the bipartite graphs in which one side
  has all degrees equal to the minimum and the other all equal to the maximum.
* connected cubic graphs: exactly the *special* graphs, a bipartite core plus
  2-connected bubbles hanging off core vertices by bridges.

Every positive answer comes with a certificate and a checker for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from egk.bubbles import (BubbleCertificate, bubble_matching_avoiding, bubble_violations,
                         recognize_bubble)
from egk.exact import (DEFAULT_MAX_N, IndependentSet, alpha_exact, mu_exact,
                       verify_independent, verify_matching, verify_vertex_cover)
from egk.graph import (Bipartition, Graph, GraphError, block_cut_tree, connected_components,
                       degree_profile, induced_subgraph, is_connected, is_two_connected,
                       two_coloring)
from egk.matching import (HallViolator, Matching, VertexCover, blossom_maximum_matching,
                          hopcroft_karp, koenig_cover, saturating_matching)


class InvalidDecompositionError(ValueError):
    pass


class InequalityViolation(AssertionError):
    """min_degree * alpha > max_degree * mu was observed; this must never happen."""


# ------------------------------------------------------------ inequality

@dataclass(frozen=True)
class ExtremalReport:
    delta: int
    Delta: int
    alpha: int
    mu: int
    independent_set: IndependentSet = field(repr=False)
    matching: Matching = field(repr=False)

    @property
    def lhs(self) -> int:
        return self.delta * self.alpha

    @property
    def rhs(self) -> int:
        return self.Delta * self.mu

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs


def check_inequality(g: Graph, max_oracle: int = DEFAULT_MAX_N, cross_check_below: int = 13) -> ExtremalReport:
    """Exact degrees, alpha and mu, with the inequality asserted.

    mu comes from the blossom algorithm; for ``n < cross_check_below`` it is
    also recomputed by exhaustive search.
    """
    delta, Delta, _ = degree_profile(g)
    alpha, indep = alpha_exact(g, max_oracle)
    m = blossom_maximum_matching(g)
    if not verify_matching(g, m):
        raise AssertionError("blossom returned an invalid matching")
    mu = len(m)
    if g.n < cross_check_below and mu_exact(g) != mu:
        raise AssertionError(f"blossom mu={mu} disagrees with exhaustive search")
    rep = ExtremalReport(delta, Delta, alpha, mu, indep, m)
    if rep.lhs > rep.rhs:
        raise InequalityViolation(f"{delta}*{alpha} > {Delta}*{mu}")
    return rep


# ----------------------------------------------------------- proof trace

@dataclass(frozen=True)
class ProofTrace:
    """Every intermediate object of the counting argument behind the inequality.

    ``H`` keeps only the edges between the maximum independent set ``I`` and
    ``R = V - I``; ``M`` and ``U`` are a maximum matching and a minimum vertex
    cover of ``H``; ``k = |I & U|`` and ``m`` counts the ``H`` edges between
    ``I - U`` and ``U & R``.
    """

    delta: int
    Delta: int
    I: tuple[int, ...]
    R: tuple[int, ...]
    H_edges: tuple[tuple[int, int], ...]
    M: Matching
    U: VertexCover
    k: int
    m: int
    mu_H: int
    mu_G: int

    @property
    def alpha(self) -> int:
        return len(self.I)

    @property
    def chain_counts(self) -> tuple[int, int, int, int, int]:
        """``delta(alpha-k) <= m <= Delta|U&R| == Delta(mu_H-k) <= Delta(mu_G-k)``."""
        u_r = len(set(self.U.vertices) & set(self.R))
        d, D, k = self.delta, self.Delta, self.k
        return (d * (self.alpha - k), self.m, D * u_r, D * (self.mu_H - k), D * (self.mu_G - k))

    @property
    def chain_totals(self) -> tuple[int, int, int, int]:
        """``delta*alpha <= delta*alpha + (Delta-delta)k <= Delta*mu_H <= Delta*mu_G``."""
        d, D, a, k = self.delta, self.Delta, self.alpha, self.k
        return (d * a, d * a + (D - d) * k, D * self.mu_H, D * self.mu_G)

    def to_dict(self) -> dict:
        return {
            "delta": self.delta, "Delta": self.Delta, "I": list(self.I), "R": list(self.R),
            "H": [list(e) for e in self.H_edges], "M": [list(e) for e in self.M.edges],
            "U": list(self.U.vertices), "k": self.k, "m": self.m,
            "mu_H": self.mu_H, "mu_G": self.mu_G,
            "chain_counts": list(self.chain_counts), "chain_totals": list(self.chain_totals),
        }

    @classmethod
    def from_dict(cls, d: dict) -> ProofTrace:
        return cls(int(d["delta"]), int(d["Delta"]), tuple(d["I"]), tuple(d["R"]),
                   tuple(tuple(e) for e in d["H"]), Matching.of(tuple(e) for e in d["M"]),
                   VertexCover(tuple(d["U"])), int(d["k"]), int(d["m"]),
                   int(d["mu_H"]), int(d["mu_G"]))


def _nondecreasing(xs) -> bool:
    return all(a <= b for a, b in zip(xs, xs[1:]))


def proof_trace(g: Graph, I: IndependentSet | None = None, max_oracle: int = DEFAULT_MAX_N) -> ProofTrace:
    """Materialise ``H, M, U, k, m`` for a maximum independent set ``I``."""
    delta, Delta, _ = degree_profile(g)
    alpha, best = alpha_exact(g, max_oracle)
    if I is None:
        I = best
    elif not verify_independent(g, I.vertices):
        raise ValueError("supplied set is not independent")
    elif len(I) != alpha:
        raise ValueError(f"supplied independent set has size {len(I)}, maximum is {alpha}")
    iset = set(I.vertices)
    R = tuple(v for v in range(g.n) if v not in iset)
    h_edges = tuple(sorted((min(u, v), max(u, v)) for u in iset for v in g.adj[u]))
    H = Graph(g.n, h_edges)
    bip = Bipartition(R, tuple(sorted(iset)))
    M = hopcroft_karp(H, bip)
    U = koenig_cover(H, bip, M)
    uset = set(U.vertices)
    k = len(iset & uset)
    m = sum(1 for a, b in h_edges
            if (a in iset and a not in uset and b in uset) or (b in iset and b not in uset and a in uset))
    trace = ProofTrace(delta, Delta, tuple(sorted(iset)), R, h_edges, M, U, k, m,
                       len(M), len(blossom_maximum_matching(g)))
    if not _nondecreasing(trace.chain_counts) or not _nondecreasing(trace.chain_totals):
        raise InequalityViolation(f"proof chain broken: {trace.chain_counts} {trace.chain_totals}")
    return trace


def verify_trace(g: Graph, t: ProofTrace) -> list[str]:
    """Recheck a trace from scratch against ``g``."""
    bad = []
    delta, Delta, _ = degree_profile(g)
    if (t.delta, t.Delta) != (delta, Delta):
        bad.append("degree bounds do not match the graph")
    if not verify_independent(g, t.I):
        bad.append("I is not independent")
    if set(t.I) | set(t.R) != set(range(g.n)) or set(t.I) & set(t.R):
        bad.append("I and R do not partition V")
    iset = set(t.I)
    want_h = sorted((min(u, v), max(u, v)) for u in iset for v in g.adj[u])
    if list(t.H_edges) != want_h:
        bad.append("H is not the set of I-R edges")
        return bad
    H = Graph(g.n, t.H_edges)
    if not verify_matching(H, t.M) or len(t.M) != t.mu_H:
        bad.append("M is not a matching of H of size mu_H")
    if not verify_vertex_cover(H, t.U.vertices) or len(t.U) != t.mu_H:
        bad.append("U is not a vertex cover of H of size mu_H")
    uset = set(t.U.vertices)
    if t.k != len(iset & uset):
        bad.append("k != |I & U|")
    m = sum(1 for a, b in t.H_edges if (a in iset and a not in uset and b in uset)
            or (b in iset and b not in uset and a in uset))
    if m != t.m:
        bad.append("m miscounted")
    if len(blossom_maximum_matching(g)) != t.mu_G:
        bad.append("mu_G is not the matching number")
    if not _nondecreasing(t.chain_counts) or not _nondecreasing(t.chain_totals):
        bad.append("inequality chains do not hold")
    return bad


# ------------------------------------------------------------- biregular

@dataclass(frozen=True)
class BiregularCertificate:
    """Per component ``(A, B)``: A-vertices have degree ``delta``, B-vertices ``Delta``."""

    delta: int
    Delta: int
    parts: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def alpha(self) -> int:
        return sum(len(a) for a, _ in self.parts)

    @property
    def mu(self) -> int:
        return sum(len(b) for _, b in self.parts)

    def to_dict(self) -> dict:
        return {"delta": self.delta, "Delta": self.Delta,
                "parts": [{"A": list(a), "B": list(b)} for a, b in self.parts]}

    @classmethod
    def from_dict(cls, d: dict) -> BiregularCertificate:
        return cls(int(d["delta"]), int(d["Delta"]),
                   tuple((tuple(p["A"]), tuple(p["B"])) for p in d["parts"]))


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: tuple[int, ...]


def biregular_violation(g: Graph) -> Violation | None:
    """First reason ``g`` is not bipartite ``(delta, Delta)``-biregular."""
    result = _biregular(g)
    return result if isinstance(result, Violation) else None


def recognize_biregular_extremal(g: Graph) -> BiregularCertificate | None:
    """Certificate that ``g`` is bipartite with sides of degree delta and Delta."""
    result = _biregular(g)
    return result if isinstance(result, BiregularCertificate) else None


def _biregular(g: Graph) -> BiregularCertificate | Violation:
    delta, Delta, degs = degree_profile(g)
    if delta == Delta:
        raise GraphError("biregular recognition needs min degree < max degree")
    col = two_coloring(g)
    if not isinstance(col, Bipartition):
        return Violation("graph is not bipartite (odd cycle)", col.vertices)
    sa = set(col.side_a)
    parts = []
    for comp in connected_components(g):
        a = [v for v in comp if v in sa]
        b = [v for v in comp if v not in sa]
        if all(degs[v] == delta for v in a) and all(degs[v] == Delta for v in b):
            parts.append((tuple(a), tuple(b)))
        elif all(degs[v] == delta for v in b) and all(degs[v] == Delta for v in a):
            parts.append((tuple(b), tuple(a)))
        else:
            odd = next((v for v in comp if degs[v] not in (delta, Delta)), None)
            if odd is not None:
                return Violation(f"vertex degree {degs[odd]} is neither {delta} nor {Delta}", (odd,))
            # both degree values occur on one side
            for side in (a, b):
                vals = {degs[v] for v in side}
                if len(vals) > 1:
                    u = next(v for v in side if degs[v] == delta)
                    w = next(v for v in side if degs[v] == Delta)
                    return Violation("one side mixes degree delta and degree Delta", (u, w))
            return Violation("both sides of a component have the same degree", (comp[0],))
    return BiregularCertificate(delta, Delta, tuple(parts))


def verify_biregular(g: Graph, cert: BiregularCertificate) -> list[str]:
    bad = []
    delta, Delta, degs = degree_profile(g)
    if (cert.delta, cert.Delta) != (delta, Delta) or delta >= Delta:
        bad.append("degree bounds do not match or are equal")
    seen: list[int] = []
    for a, b in cert.parts:
        seen.extend(a)
        seen.extend(b)
        if any(degs[v] != delta for v in a):
            bad.append("an A-vertex does not have the minimum degree")
        if any(degs[v] != Delta for v in b):
            bad.append("a B-vertex does not have the maximum degree")
    if sorted(seen) != list(range(g.n)):
        bad.append("parts do not partition the vertex set")
        return bad
    side_a = {v for a, _ in cert.parts for v in a}
    if any((u in side_a) == (v in side_a) for u, v in g.edges()):
        bad.append("an edge does not cross between A and B")
    return bad


# ------------------------------------------------------------- special

@dataclass(frozen=True)
class SpecialDecomposition:
    """Core ``V0 = I0 | R0`` plus bubbles, each hung from ``I0`` by a bridge."""

    V0: tuple[int, ...]
    I0: tuple[int, ...]
    R0: tuple[int, ...]
    bubbles: tuple[BubbleCertificate, ...] = ()
    bridges: tuple[tuple[int, int], ...] = ()

    @property
    def ell(self) -> int:
        return len(self.bubbles)

    def bubble_vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(b.vertices) for b in self.bubbles]

    def relabel(self, mapping) -> SpecialDecomposition:
        return SpecialDecomposition(
            tuple(sorted(mapping[v] for v in self.V0)),
            tuple(sorted(mapping[v] for v in self.I0)),
            tuple(sorted(mapping[v] for v in self.R0)),
            tuple(b.relabel(mapping) for b in self.bubbles),
            tuple((mapping[z], mapping[w]) for z, w in self.bridges),
        )

    def to_dict(self) -> dict:
        return {
            "V0": list(self.V0), "I0": list(self.I0), "R0": list(self.R0), "ell": self.ell,
            "bubbles": [dict(b.to_dict(), vertices=list(b.vertices)) for b in self.bubbles],
            "bridges": [list(e) for e in self.bridges],
        }

    @classmethod
    def from_dict(cls, d: dict) -> SpecialDecomposition:
        return cls(tuple(d["V0"]), tuple(d["I0"]), tuple(d["R0"]),
                   tuple(BubbleCertificate.from_dict(b) for b in d["bubbles"]),
                   tuple(tuple(e) for e in d["bridges"]))


def verify_special(g: Graph, d: SpecialDecomposition) -> list[str]:
    """Check every clause of the special-graph definition; empty means valid."""
    bad = []
    if not is_connected(g) or any(len(row) != 3 for row in g.adj):
        bad.append("graph is not connected and cubic")
        return bad
    parts = [set(d.V0)] + [set(b.vertices) for b in d.bubbles]
    allv = [v for p in parts for v in p]
    if sorted(allv) != list(range(g.n)):
        bad.append("V0, V1, ..., Vl do not partition the vertex set")
        return bad
    if not d.V0:
        bad.append("core V0 is empty")
        return bad
    i0, r0 = set(d.I0), set(d.R0)
    if i0 & r0 or i0 | r0 != set(d.V0):
        bad.append("I0 and R0 do not partition V0")
        return bad
    core, _, new_to_old = induced_subgraph(g, d.V0)
    if not is_connected(core):
        bad.append("G[V0] is not connected")
    core_deg = {new_to_old[i]: len(row) for i, row in enumerate(core.adj)}
    for u in d.V0:
        for w in g.adj[u]:
            if w in i0 and u in i0 or w in r0 and u in r0:
                bad.append(f"edge {u}-{w} does not cross between I0 and R0")
                break
    if any(core_deg[v] != 3 for v in r0):
        bad.append("an R0 vertex has fewer than 3 neighbours in G[V0]")
    deficiency = sum(3 - core_deg[u] for u in i0)
    if deficiency != d.ell:
        bad.append(f"l = {d.ell} but the I0 deficiency sums to {deficiency}")
    if len(d.bridges) != d.ell:
        bad.append("one bridge per bubble expected")
        return bad
    bridge_set = {(min(a, b), max(a, b)) for a, b in block_cut_tree(g).bridges()}
    for b, (z, zp) in zip(d.bubbles, d.bridges):
        if z != b.contact:
            bad.append(f"bridge {z}-{zp} does not start at contact {b.contact}")
        if zp not in i0:
            bad.append(f"bridge partner {zp} is not in I0")
        if (min(z, zp), max(z, zp)) not in bridge_set:
            bad.append(f"{z}-{zp} is not a bridge of G")
        viol = bubble_violations(g, b)
        if viol:
            bad.append(f"bubble at {b.contact}: " + "; ".join(viol))
        sub, _, _ = induced_subgraph(g, b.vertices)
        if not is_two_connected(sub):
            bad.append(f"bubble at {b.contact} is not 2-connected")
    return bad


def recognize_special(g: Graph) -> SpecialDecomposition | None:
    """Decompose a connected cubic graph into core and bubbles, if possible.

    Odd cycles never cross bridges and the core is bipartite, so in a special
    graph the non-bipartite blocks are exactly the bubbles.  Each one must
    hang from a single cut vertex of block-degree 2 and pass
    :func:`recognize_bubble`; what remains must be a connected bipartite core
    whose degree deficits sit on one side.
    """
    if not is_connected(g):
        raise GraphError("recognize_special needs a connected graph")
    if any(len(row) != 3 for row in g.adj):
        raise GraphError("recognize_special needs a cubic graph")
    col = two_coloring(g)
    if isinstance(col, Bipartition):
        return SpecialDecomposition(tuple(range(g.n)), col.side_a, col.side_b)

    tree = block_cut_tree(g)
    bubbles = []
    for block in tree.blocks:
        if block.is_bridge:
            continue
        sub, old_to_new, new_to_old = induced_subgraph(g, block.vertices)
        if isinstance(two_coloring(sub), Bipartition):
            continue
        cuts = [v for v in block.vertices if v in tree.cut_vertices]
        if len(cuts) != 1:
            return None
        z = cuts[0]
        if sub.degree(old_to_new[z]) != 2:
            return None
        cert = recognize_bubble(sub)
        if cert is None or new_to_old[cert.contact] != z:
            return None
        bubbles.append(cert.relabel(new_to_old))

    in_bubble = {v for b in bubbles for v in b.vertices}
    V0 = tuple(v for v in range(g.n) if v not in in_bubble)
    if not V0:
        return None
    core, _, new_to_old = induced_subgraph(g, V0)
    if not is_connected(core):
        return None
    ccol = two_coloring(core)
    if not isinstance(ccol, Bipartition):
        return None
    side_a = {new_to_old[v] for v in ccol.side_a}
    side_b = {new_to_old[v] for v in ccol.side_b}
    deficient = {new_to_old[v] for v, row in enumerate(core.adj) if len(row) < 3}
    if deficient <= side_a:
        i0, r0 = side_a, side_b
    elif deficient <= side_b:
        i0, r0 = side_b, side_a
    else:
        return None

    bridge_list = []
    for b in bubbles:
        verts = set(b.vertices)
        outside = [w for w in g.adj[b.contact] if w not in verts]
        if len(outside) != 1 or outside[0] not in i0:
            return None
        bridge_list.append((b.contact, outside[0]))

    d = SpecialDecomposition(V0, tuple(sorted(i0)), tuple(sorted(r0)), tuple(bubbles),
                             tuple(bridge_list))
    if sum(3 - len(core.adj[i]) for i in range(core.n) if new_to_old[i] in i0) != d.ell:
        return None
    problems = verify_special(g, d)
    if problems:
        # every check above passed, so this would be a flaw in the reconstruction
        raise AssertionError("recognize_special built an invalid decomposition: " + "; ".join(problems))
    return d


def build_witnesses(g: Graph, d: SpecialDecomposition) -> tuple[IndependentSet, Matching]:
    """Equal-size independent set and matching certifying ``alpha == mu``."""
    problems = verify_special(g, d)
    if problems:
        raise InvalidDecompositionError("; ".join(problems))
    indep = sorted(set(d.I0).union(*(b.I for b in d.bubbles)))
    contacts = [b.contact for b in d.bubbles]
    gp, _, new_to_old = induced_subgraph(g, list(d.V0) + contacts)
    local = {v: i for i, v in enumerate(new_to_old)}
    bip = Bipartition(tuple(local[v] for v in d.I0),
                      tuple(sorted(local[v] for v in list(d.R0) + contacts)))
    res = saturating_matching(gp, bip, "A")
    if isinstance(res, HallViolator):
        raise InvalidDecompositionError("no matching saturates I0 in the core plus contacts")
    edges = [(new_to_old[a], new_to_old[b]) for a, b in res.edges]
    for b in d.bubbles:
        edges.extend(bubble_matching_avoiding(g, b, b.contact).edges)
    m = Matching.of(edges)
    if not verify_independent(g, indep) or not verify_matching(g, m) or len(m) != len(indep):
        raise AssertionError("witness construction produced an invalid pair")
    return IndependentSet(tuple(indep)), m


def verify_witness_pair(g: Graph, indep: IndependentSet, m: Matching) -> list[str]:
    bad = []
    if not verify_independent(g, indep.vertices):
        bad.append("independent set is not independent")
    if not verify_matching(g, m):
        bad.append("matching is not a matching")
    if len(indep) != len(m):
        bad.append(f"sizes differ: {len(indep)} vs {len(m)}")
    return bad


# ------------------------------------------------------------ dispatcher

@dataclass(frozen=True)
class SmallDegreeCertificate:
    """Regular of degree 0, 1 or 2: edgeless, perfect matching, or cycles."""

    family: str
    components: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"family": self.family, "components": [list(c) for c in self.components]}

    @classmethod
    def from_dict(cls, d: dict) -> SmallDegreeCertificate:
        return cls(d["family"], tuple(tuple(c) for c in d["components"]))


@dataclass(frozen=True)
class SpecialComponents:
    """One special decomposition per component of a cubic graph."""

    components: tuple[SpecialDecomposition, ...]
    witnesses: tuple[IndependentSet, Matching] | None = None

    def to_dict(self) -> dict:
        out = {"components": [d.to_dict() for d in self.components]}
        if self.witnesses is not None:
            out["independent_set"] = list(self.witnesses[0].vertices)
            out["matching"] = [list(e) for e in self.witnesses[1].edges]
        return out

    @classmethod
    def from_dict(cls, d: dict) -> SpecialComponents:
        wit = None
        if "independent_set" in d:
            wit = (IndependentSet(tuple(d["independent_set"])),
                   Matching.of(tuple(e) for e in d["matching"]))
        return cls(tuple(SpecialDecomposition.from_dict(c) for c in d["components"]), wit)


@dataclass(frozen=True)
class ExtremalVerdict:
    verdict: str                  # tight | strict | oracle-only | not-applicable
    delta: int | None
    Delta: int | None
    alpha: int | None
    mu: int | None
    certificate: object | None = None
    note: str = ""

    @property
    def lhs(self) -> int | None:
        return None if self.alpha is None else self.delta * self.alpha

    @property
    def rhs(self) -> int | None:
        return None if self.mu is None else self.Delta * self.mu

    @property
    def tight(self) -> bool:
        return self.verdict == "tight" or (self.verdict == "oracle-only" and self.lhs == self.rhs)


def _component_graphs(g: Graph):
    for comp in connected_components(g):
        sub, _, new_to_old = induced_subgraph(g, comp)
        yield sub, new_to_old


def _alpha_if_small(g: Graph, max_oracle: int) -> int | None:
    return alpha_exact(g, max_oracle)[0] if g.n <= max_oracle else None


def is_extremal(g: Graph, max_oracle: int = DEFAULT_MAX_N) -> ExtremalVerdict:
    """Decide ``delta * alpha == Delta * mu`` with a structural certificate.

    Regular graphs of degree 4 or more have no known characterization; they
    get an oracle-only verdict computed from exact alpha and mu.
    """
    if g.n == 0:
        return ExtremalVerdict("not-applicable", None, None, None, None, note="empty graph")
    delta, Delta, _ = degree_profile(g)
    mu = len(blossom_maximum_matching(g))

    if delta < Delta:
        cert = recognize_biregular_extremal(g)
        if cert is not None:
            return ExtremalVerdict("tight", delta, Delta, cert.alpha, mu, cert)
        viol = biregular_violation(g)
        return ExtremalVerdict("strict", delta, Delta, _alpha_if_small(g, max_oracle), mu,
                               note=f"not ({delta},{Delta})-biregular: {viol.clause}")

    if Delta <= 2:
        comps = tuple(tuple(c) for c in connected_components(g))
        family = {0: "edgeless", 1: "perfect-matching", 2: "cycles"}[Delta]
        alpha = sum(len(c) // 2 for c in comps) if Delta else g.n
        return ExtremalVerdict("tight", delta, Delta, alpha, mu, SmallDegreeCertificate(family, comps))

    if Delta == 3:
        decomps, indep, match = [], [], []
        for sub, new_to_old in _component_graphs(g):
            d = recognize_special(sub)
            if d is None:
                return ExtremalVerdict("strict", 3, 3, _alpha_if_small(g, max_oracle), mu,
                                       note="a component is not special")
            i_sub, m_sub = build_witnesses(sub, d)
            decomps.append(d.relabel(new_to_old))
            indep.extend(new_to_old[v] for v in i_sub.vertices)
            match.extend((new_to_old[a], new_to_old[b]) for a, b in m_sub.edges)
        wit = (IndependentSet(tuple(sorted(indep))), Matching.of(match))
        if len(wit[1]) != mu:
            raise AssertionError("witness matching is smaller than the blossom matching")
        return ExtremalVerdict("tight", 3, 3, len(wit[0]), mu, SpecialComponents(tuple(decomps), wit))

    rep = check_inequality(g, max_oracle)
    return ExtremalVerdict("oracle-only", delta, Delta, rep.alpha, rep.mu,
                           note=f"{Delta}-regular: no structural characterization known; exact values only")

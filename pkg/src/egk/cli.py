"""Command-line front-end: ``egk <subcommand> [input] [flags]``.

Input is a file (or ``-`` for stdin) holding graph6 lines or a single edge
list.  Every certificate is re-verified in-process before it is printed.

Exit codes: 0 tight / verified, 1 usage or parse error, 2 the inequality was
violated (never expected), 3 not tight, 4 only an oracle verdict exists.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from egk.bubbles import (CATALOG, BubbleCertificate, GenerationError, generate_bubble,
                         recognize_bubble, verify_bubble)
from egk.exact import (ENUMERATE_MAX_N, MU_EXACT_MAX_N, OracleScaleError,
                       alpha_enumerate, alpha_exact, mu_exact, verify_independent,
                       verify_matching)
from egk.generators import (compose_special, enumerate_cubic_connected,
                            k23_core_spec, generate_biregular, random_cubic, random_special)
from egk.graph import (Bipartition, Graph, GraphError, connected_components, degree_profile,
                       induced_subgraph, parse_edge_list, parse_graph6, read_graph6_lines,
                       serialize_graph6)
from egk.matching import Matching, blossom_maximum_matching, hopcroft_karp
from egk.recognition import (BiregularCertificate, InequalityViolation, ProofTrace,
                             SmallDegreeCertificate, SpecialComponents, SpecialDecomposition,
                             check_inequality, is_extremal, proof_trace, verify_biregular,
                             verify_special, verify_trace, verify_witness_pair)

SCHEMA = "egk/1"
EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_NOT_TIGHT, EXIT_ORACLE_ONLY = 0, 1, 2, 3, 4
VERDICTS = ("tight", "strict", "not-applicable", "oracle-only")

# integer fields that are counts, not vertex ids
_SCALAR_KEYS = frozenset({"delta", "Delta", "k", "m", "mu_H", "mu_G", "ell", "chain_counts",
                          "chain_totals", "alpha", "mu", "n"})


class DocumentError(ValueError):
    pass


@dataclass
class CertificateDocument:
    input: str
    verdict: str
    quantities: dict
    certificate: dict | None = None
    note: str = ""
    schema_version: str = SCHEMA

    def to_json(self) -> str:
        body = {"schema_version": self.schema_version, "input": self.input,
                "verdict": self.verdict, "quantities": self.quantities,
                "certificate": self.certificate}
        if self.note:
            body["note"] = self.note
        return json.dumps(body, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> CertificateDocument:
        try:
            body = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not JSON: {exc}") from None
        if body.get("schema_version") != SCHEMA:
            raise DocumentError(f"unsupported schema {body.get('schema_version')!r}")
        if body.get("verdict") not in VERDICTS:
            raise DocumentError(f"unknown verdict {body.get('verdict')!r}")
        doc = cls(body["input"], body["verdict"], body["quantities"], body.get("certificate"),
                  body.get("note", ""))
        g = doc.graph()
        bad = [v for v in _vertex_ids(doc.certificate) if not 0 <= v < g.n]
        if bad:
            raise DocumentError(f"certificate names vertices outside the graph: {sorted(set(bad))}")
        return doc

    def graph(self) -> Graph:
        return parse_graph6(self.input)


def _vertex_ids(obj, key: str | None = None):
    if key in _SCALAR_KEYS or key == "kind":
        return
    if isinstance(obj, bool):
        return
    if isinstance(obj, int):
        yield obj
    elif isinstance(obj, list):
        for x in obj:
            yield from _vertex_ids(x, key)
    elif isinstance(obj, dict):
        for k, v in obj.items():
            yield from _vertex_ids(v, k)


def _quantities(delta, Delta, alpha, mu) -> dict:
    return {"delta": delta, "Delta": Delta, "alpha": alpha, "mu": mu,
            "lhs": None if alpha is None else delta * alpha,
            "rhs": None if mu is None else Delta * mu}


# ---------------------------------------------------------- certificates

def _pair_dict(kind: str, indep, m: Matching) -> dict:
    return {"kind": kind, "independent_set": list(indep), "matching": [list(e) for e in m.edges]}


def verify_certificate(g: Graph, cert: dict, quantities: dict | None = None) -> list[str]:
    """Recheck a certificate dict against ``g``; returns the list of problems."""
    kind = cert.get("kind")
    if kind == "biregular":
        return verify_biregular(g, BiregularCertificate.from_dict(cert))
    if kind == "special":
        return _verify_special_components(g, SpecialComponents.from_dict(cert))
    if kind == "special-decomposition":
        return verify_special(g, SpecialDecomposition.from_dict(cert))
    if kind == "small-degree":
        return _verify_small_degree(g, SmallDegreeCertificate.from_dict(cert))
    if kind == "bubble":
        return verify_bubble(g, BubbleCertificate.from_dict(cert))
    if kind == "trace":
        return verify_trace(g, ProofTrace.from_dict(cert))
    if kind in ("witness", "oracle"):
        indep = cert["independent_set"]
        m = Matching.of(tuple(e) for e in cert["matching"])
        bad = []
        if not verify_independent(g, indep):
            bad.append("independent set is not independent")
        if not verify_matching(g, m):
            bad.append("matching is not a matching")
        delta, Delta, _ = degree_profile(g)
        if kind == "witness" and delta * len(indep) != Delta * len(m):
            bad.append(f"{delta}*{len(indep)} != {Delta}*{len(m)}")
        if kind == "oracle" and quantities is not None:
            if (len(indep), len(m)) != (quantities.get("alpha"), quantities.get("mu")):
                bad.append("witness sizes differ from the reported alpha and mu")
        return bad
    return [f"unknown certificate kind {kind!r}"]


def _verify_special_components(g: Graph, sc: SpecialComponents) -> list[str]:
    bad = []
    comps = sorted(tuple(sorted(set(d.V0).union(*d.bubble_vertex_sets()))) for d in sc.components)
    if comps != sorted(tuple(c) for c in connected_components(g)):
        return ["decompositions do not match the connected components"]
    for d in sc.components:
        verts = sorted(set(d.V0).union(*d.bubble_vertex_sets()))
        sub, old_to_new, _ = induced_subgraph(g, verts)
        bad += verify_special(sub, d.relabel(old_to_new))
    if sc.witnesses is not None:
        bad += verify_witness_pair(g, *sc.witnesses)
    return bad


def _verify_small_degree(g: Graph, c: SmallDegreeCertificate) -> list[str]:
    want = {"edgeless": 0, "perfect-matching": 1, "cycles": 2}.get(c.family)
    if want is None:
        return [f"unknown family {c.family!r}"]
    if any(len(row) != want for row in g.adj):
        return [f"graph is not {want}-regular"]
    if sorted(tuple(x) for x in c.components) != sorted(tuple(x) for x in connected_components(g)):
        return ["components do not match"]
    return []


def _checked(g: Graph, cert: dict, quantities: dict | None = None) -> dict:
    problems = verify_certificate(g, cert, quantities)
    if problems:
        raise AssertionError(f"refusing to print an invalid {cert['kind']} certificate: "
                             + "; ".join(problems))
    return cert


def _extremal_cert(cert) -> dict:
    if isinstance(cert, BiregularCertificate):
        return dict(cert.to_dict(), kind="biregular")
    if isinstance(cert, SpecialComponents):
        return dict(cert.to_dict(), kind="special",
                    ell=sum(d.ell for d in cert.components))
    if isinstance(cert, SmallDegreeCertificate):
        return dict(cert.to_dict(), kind="small-degree")
    raise TypeError(type(cert))


def _witness_pair(g: Graph, verdict) -> tuple[list[int], Matching]:
    cert = verdict.certificate
    if isinstance(cert, SpecialComponents):
        indep, m = cert.witnesses
        return list(indep.vertices), m
    if isinstance(cert, BiregularCertificate):
        a = sorted(v for part, _ in cert.parts for v in part)
        b = sorted(v for _, part in cert.parts for v in part)
        return a, hopcroft_karp(g, Bipartition(tuple(b), tuple(a)))
    if isinstance(cert, SmallDegreeCertificate):
        indep, edges = [], []
        for comp in cert.components:
            if cert.family == "edgeless":
                indep.extend(comp)
                continue
            order = _walk(g, comp)
            indep.extend(order[0:len(order) - 1:2] if len(order) % 2 else order[0::2])
            edges.extend((order[i], order[i + 1]) for i in range(0, len(order) - 1, 2))
        return sorted(indep), Matching.of(edges)
    rep = check_inequality(g)
    return list(rep.independent_set.vertices), rep.matching


def _walk(g: Graph, comp) -> list[int]:
    # vertices of a path-like component (an edge or a cycle) in traversal order
    order, prev, v = [comp[0]], None, comp[0]
    while True:
        nxt = [w for w in g.adj[v] if w != prev and w != order[0]]
        if not nxt:
            return order
        prev, v = v, nxt[0]
        order.append(v)


# --------------------------------------------------------------- commands

def cmd_check(g: Graph, max_oracle: int) -> tuple[int, CertificateDocument]:
    try:
        rep = check_inequality(g, max_oracle)
    except InequalityViolation as exc:
        return EXIT_VIOLATION, CertificateDocument(serialize_graph6(g), "strict", {}, None,
                                                   f"inequality violated: {exc}")
    q = _quantities(rep.delta, rep.Delta, rep.alpha, rep.mu)
    cert = _checked(g, _pair_dict("oracle", rep.independent_set.vertices, rep.matching), q)
    return EXIT_OK, CertificateDocument(serialize_graph6(g), "tight" if rep.tight else "strict",
                                        q, cert)


def cmd_extremal(g: Graph, max_oracle: int) -> tuple[int, CertificateDocument]:
    v = is_extremal(g, max_oracle)
    q = _quantities(v.delta, v.Delta, v.alpha, v.mu)
    if v.verdict == "oracle-only":
        return EXIT_ORACLE_ONLY, CertificateDocument(serialize_graph6(g), v.verdict, q, None, v.note)
    if v.verdict != "tight":
        return EXIT_NOT_TIGHT, CertificateDocument(serialize_graph6(g), v.verdict, q, None, v.note)
    cert = _checked(g, _extremal_cert(v.certificate))
    return EXIT_OK, CertificateDocument(serialize_graph6(g), "tight", q, cert, v.note)


def cmd_bubble(g: Graph, max_oracle: int) -> tuple[int, CertificateDocument]:
    try:
        cert = recognize_bubble(g)
    except GraphError as exc:
        cert, why = None, str(exc)
    else:
        why = "not a bubble"
    if cert is None:
        return EXIT_NOT_TIGHT, CertificateDocument(serialize_graph6(g), "not-applicable", {}, None, why)
    delta, Delta, _ = degree_profile(g)
    q = _quantities(delta, Delta, alpha_exact(g, max_oracle)[0], len(blossom_maximum_matching(g)))
    body = _checked(g, dict(cert.to_dict(), kind="bubble"))
    return EXIT_OK, CertificateDocument(serialize_graph6(g), "strict", q, body)


def cmd_witness(g: Graph, max_oracle: int) -> tuple[int, CertificateDocument]:
    v = is_extremal(g, max_oracle)
    q = _quantities(v.delta, v.Delta, v.alpha, v.mu)
    if not v.tight:
        return EXIT_NOT_TIGHT, CertificateDocument(serialize_graph6(g), v.verdict, q, None,
                                                   v.note or "no tight witness pair exists")
    indep, m = _witness_pair(g, v)
    cert = _checked(g, _pair_dict("witness", indep, m))
    return EXIT_OK, CertificateDocument(serialize_graph6(g), "tight", q, cert)


def cmd_trace(g: Graph, max_oracle: int) -> tuple[int, CertificateDocument]:
    t = proof_trace(g, max_oracle=max_oracle)
    q = _quantities(t.delta, t.Delta, t.alpha, t.mu_G)
    cert = _checked(g, dict(t.to_dict(), kind="trace"))
    verdict = "tight" if q["lhs"] == q["rhs"] else "strict"
    return EXIT_OK, CertificateDocument(serialize_graph6(g), verdict, q, cert)


def cmd_oracle(g: Graph, max_oracle: int) -> tuple[int, CertificateDocument]:
    alpha, indep = alpha_exact(g, max_oracle)
    m = blossom_maximum_matching(g)
    notes = []
    if g.n <= ENUMERATE_MAX_N and alpha_enumerate(g) != alpha:
        raise AssertionError("alpha oracles disagree")
    if g.n <= MU_EXACT_MAX_N and mu_exact(g) != len(m):
        raise AssertionError("mu oracles disagree")
    if g.n <= ENUMERATE_MAX_N:
        notes.append("alpha cross-checked by enumeration")
    if g.n <= MU_EXACT_MAX_N:
        notes.append("mu cross-checked by exhaustive search")
    delta, Delta, _ = degree_profile(g) if g.n else (0, 0, [])
    q = _quantities(delta, Delta, alpha, len(m))
    cert = _checked(g, _pair_dict("oracle", indep.vertices, m), q)
    verdict = "tight" if q["lhs"] == q["rhs"] else "strict"
    return EXIT_OK, CertificateDocument(serialize_graph6(g), verdict, q, cert, "; ".join(notes))


COMMANDS = {"check": cmd_check, "extremal": cmd_extremal, "bubble": cmd_bubble,
            "witness": cmd_witness, "trace": cmd_trace, "oracle": cmd_oracle}


def _human(cmd: str, doc: CertificateDocument) -> str:
    q = doc.quantities
    parts = [doc.input, doc.verdict]
    if q.get("lhs") is not None and q.get("rhs") is not None:
        rel = "=" if q["lhs"] == q["rhs"] else ("<" if q["lhs"] < q["rhs"] else ">")
        parts.append(f"{q['delta']}*{q['alpha']}={q['lhs']} {rel} {q['Delta']}*{q['mu']}={q['rhs']}")
    if doc.certificate:
        kind = doc.certificate["kind"]
        extra = f" l={doc.certificate['ell']}" if "ell" in doc.certificate else ""
        parts.append(f"certificate={kind}{extra}")
    if doc.note:
        parts.append(f"({doc.note})")
    return "  ".join(parts)


def run_one(cmd: str, g6: str, max_oracle: int, as_json: bool) -> tuple[int, str]:
    """Run a subcommand on one graph; returns (exit code, output line)."""
    g = parse_graph6(g6)
    try:
        code, doc = COMMANDS[cmd](g, max_oracle)
    except OracleScaleError as exc:
        return EXIT_USAGE, f"error: {exc}"
    except GraphError as exc:
        return EXIT_USAGE, f"error: {exc}"
    return code, doc.to_json() if as_json else _human(cmd, doc)


def _run_star(args):
    return run_one(*args)


# ----------------------------------------------------------------- input

def _read_graphs(path: str, fmt: str | None) -> list[Graph]:
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    if fmt is None:
        fmt = "edgelist" if path.endswith(".el") else "graph6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    return read_graph6_lines(text)


def cmd_generate(args) -> tuple[int, list[str]]:
    kind, params = args.family, args.params
    seed = args.seed
    out: list[str] = []

    def emit(g: Graph, cert: dict | None = None):
        if args.json:
            delta, Delta, _ = degree_profile(g) if g.n else (0, 0, [])
            doc = CertificateDocument(serialize_graph6(g), "not-applicable",
                                      {"delta": delta, "Delta": Delta, "n": g.n},
                                      _checked(g, cert) if cert else None)
            out.append(doc.to_json())
        else:
            out.append(serialize_graph6(g))

    ints = [int(p) for p in params if p.lstrip("-").isdigit()]
    if kind == "biregular":
        if len(ints) != 2:
            raise GraphError("usage: generate biregular DELTA MAXDEGREE [--scale S]")
        g = generate_biregular(ints[0], ints[1], args.scale, seed)
        emit(g)
    elif kind == "cubic":
        if len(ints) != 1:
            raise GraphError("usage: generate cubic N")
        emit(random_cubic(ints[0], seed))
    elif kind == "enumerate":
        if len(ints) != 1:
            raise GraphError("usage: generate enumerate N")
        for g in enumerate_cubic_connected(ints[0]):
            emit(g)
    elif kind == "bubble":
        if len(params) != 1:
            raise GraphError(f"usage: generate bubble ID|N  (ids: {', '.join(CATALOG)})")
        g, c = generate_bubble(params[0], seed)
        emit(g, dict(c.to_dict(), kind="bubble"))
    elif kind == "special":
        if params == ["k23"]:
            g, d = compose_special(k23_core_spec(), seed)
        elif not params:
            g, d = random_special(seed)
        else:
            raise GraphError("usage: generate special [k23]")
        emit(g, dict(d.to_dict(), kind="special-decomposition"))
    else:
        raise GraphError(f"unknown family {kind!r}")
    return EXIT_OK, out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one egk/1 JSON document per graph")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-oracle", type=int, default=40, metavar="N",
                        help="refuse exact alpha above N vertices (default 40)")

    parser = argparse.ArgumentParser(prog="egk", description="Certified checks of "
                                     "min-degree * alpha <= max-degree * mu.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [("check", "exact alpha, mu and the inequality"),
                            ("extremal", "decide equality with a structural certificate"),
                            ("bubble", "recognize a bubble"),
                            ("witness", "independent set and matching certifying equality"),
                            ("trace", "intermediate quantities of the counting argument"),
                            ("oracle", "exact alpha and mu with cross-checks")]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
        p.add_argument("--format", choices=("graph6", "edgelist"), default=None,
                       help="input format (default: from extension, .el = edgelist)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for corpora")
    g = sub.add_parser("generate", parents=[common], help="emit generated graphs as graph6")
    g.add_argument("family", choices=("biregular", "cubic", "enumerate", "bubble", "special"))
    g.add_argument("params", nargs="*")
    g.add_argument("--scale", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "generate":
        try:
            code, lines = cmd_generate(args)
        except (GraphError, GenerationError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        for line in lines:
            print(line)
        return code

    try:
        graphs = _read_graphs(args.input, args.format)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    jobs = [(args.command, serialize_graph6(g), args.max_oracle, args.json) for g in graphs]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_star, jobs, chunksize=8))
    else:
        results = [run_one(*j) for j in jobs]

    worst = EXIT_OK
    for code, line in results:
        print(line, file=sys.stderr if code == EXIT_USAGE else sys.stdout)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    raise SystemExit(main())

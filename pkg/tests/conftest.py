from __future__ import annotations

import sys
from pathlib import Path

import networkx as nx
import pytest

from egk.graph import Graph, read_graph6_lines

FIXTURES = Path(__file__).parent / "fixtures"


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), h.edges())


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def fixture_lines(name: str) -> list[str]:
    return [ln for ln in (FIXTURES / name).read_text().splitlines() if ln.strip()]


def fixture_graphs(name: str) -> list[Graph]:
    return read_graph6_lines((FIXTURES / name).read_text())


@pytest.fixture
def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

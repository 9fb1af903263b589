from __future__ import annotations

import random

import networkx as nx
import pytest
import sympy

from linedigraph import build_digraph, random_digraph


def to_nx(G):
    H = nx.MultiDiGraph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.arcs)
    return H


def isomorphic(G, H) -> bool:
    return nx.is_isomorphic(to_nx(G), to_nx(H))


def sympy_walks(G, k: int) -> int:
    """j A^k j^T via sympy's matrix power, independent of the package's arithmetic."""
    A = sympy.zeros(G.n, G.n)
    for u, v in G.arcs:
        A[u, v] += 1
    if G.n == 0:
        return 0
    return int(sum(A ** k))


def seeded_digraphs(count: int, max_n: int, p=0.3, base_seed: int = 1000):
    """Reproducible random digraphs with n drawn from 1..max_n."""
    rng = random.Random(base_seed)
    return [random_digraph(rng.randint(1, max_n), p, base_seed + i) for i in range(count)]


@pytest.fixture
def c3():
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed, limit in sorted(RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit:.0f}s)")

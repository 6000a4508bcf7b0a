import numpy as np
import pytest
from hypothesis import strategies as st

from incidence_centrality.graph import DirectedGraph, connected_components


def path(n):
    return DirectedGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n):
    return DirectedGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(leaves):
    return DirectedGraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete(n):
    return DirectedGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def random_graph(rng, n, p, directed=True):
    """Random (multi)graph: each ordered pair kept with probability p, random orientation."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j) if (not directed or rng.random() < 0.5) else (j, i))
    return DirectedGraph(n, tuple(edges))


def random_connected_graph(rng, n, p):
    """Random spanning tree plus G(n, p) extras, randomly oriented and shuffled."""
    perm = rng.permutation(n)
    edges = {tuple(sorted((int(perm[i]), int(perm[rng.integers(0, i)])))) for i in range(1, n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    edges = sorted(edges)
    rng.shuffle(edges)
    oriented = tuple((a, b) if rng.random() < 0.5 else (b, a) for a, b in edges)
    return DirectedGraph(n, oriented)


@st.composite
def graphs(draw, min_n=1, max_n=12, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    if not pairs:
        return DirectedGraph(n)
    edges = draw(st.lists(st.sampled_from(pairs), max_size=3 * n))
    if connected:
        tree = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
        edges = tree + edges
    return DirectedGraph(n, tuple(edges))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def is_connected(g):
    return len(connected_components(g)) == 1


ACCEPTANCE_LINES = []


def record_criterion(number, passed, detail):
    ACCEPTANCE_LINES.append(f"AC{number:>2} {'PASS' if passed else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

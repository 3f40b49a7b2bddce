import random

import pytest
from hypothesis import strategies as st

from topoidx.graph import MolecularGraph, build_graph


def random_connected_graph(rng: random.Random, n: int, extra: int) -> MolecularGraph:
    """Random spanning tree on n vertices plus up to ``extra`` chords."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


@st.composite
def connected_graphs(draw, max_vertices=30):
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    extra = draw(st.integers(min_value=0, max_value=2 * n))
    return random_connected_graph(random.Random(seed), n, extra)


@st.composite
def simple_graphs(draw, max_vertices=20):
    """Arbitrary simple graphs, possibly disconnected or with isolated vertices."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@pytest.fixture
def k2():
    return build_graph(2, [(0, 1)])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")

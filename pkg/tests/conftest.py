import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from bipinterval.graph import BipartiteGraph, BiregularSignature, random_biregular  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def signatures(draw, max_m=12, max_deg=5):
    """Feasible Bip(m, l, n, k) signatures with l <= n and k <= m."""
    l = draw(st.integers(1, max_deg))
    n = draw(st.integers(l, max_m))
    k = draw(st.integers(l, max_m).filter(lambda k: (n * k) % l == 0))
    m = n * k // l
    from hypothesis import assume

    assume(n <= m <= max_m and k <= m)
    return BiregularSignature(m, l, n, k)


@st.composite
def biregular_graphs(draw, max_m=12, max_deg=5):
    sig = draw(signatures(max_m, max_deg))
    seed = draw(st.integers(0, 2**63 - 1))
    return random_biregular(sig, seed)


@st.composite
def small_graphs(draw, max_side=4, max_edges=None):
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    all_edges = [(x, y) for x in range(1, m + 1) for y in range(1, n + 1)]
    edges = draw(st.lists(st.sampled_from(all_edges), min_size=1, unique=True,
                          max_size=max_edges or len(all_edges)))
    return BipartiteGraph.from_edges(m, n, edges)


@pytest.fixture
def c6():
    from bipinterval.graph import even_cycle

    return even_cycle(3)


@pytest.fixture
def k22():
    from bipinterval.graph import complete_bipartite

    return complete_bipartite(2, 2)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

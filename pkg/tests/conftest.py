import pytest
from hypothesis import settings, strategies as st

from signed_interval import Digraph
from signed_interval.generators import undirected

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def digraphs(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    rows = [draw(st.integers(0, (1 << n) - 1)) for _ in range(n)]
    return Digraph.from_rows(rows)


@st.composite
def digraph_with_ordering(draw, max_n=5):
    h = draw(digraphs(max_n=max_n))
    return h, draw(st.permutations(range(h.n)))


@st.composite
def symmetric_digraphs(draw, max_n=6, loops="random"):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    g = undirected(n, edges, loops=False)
    if loops == "all":
        return g.with_loops(range(n))
    if loops == "random":
        return g.with_loops(v for v in range(n) if draw(st.booleans()))
    return g


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=6)


@pytest.fixture
def reflexive_p3():
    return undirected(3, [(0, 1), (1, 2)])

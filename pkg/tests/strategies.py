"""Hypothesis strategies for small graphs of out-degree at most 1."""

import random

from hypothesis import strategies as st

from leavitt.generate import random_functional_graph
from leavitt.graph import Graph


@st.composite
def trees(draw, max_vertices=7):
    """Connected trees with edges pointing at the sink ``v1``."""
    n = draw(st.integers(1, max_vertices))
    parents = [draw(st.integers(0, k - 1)) for k in range(1, n)]
    vertices = tuple(f"v{k + 1}" for k in range(n))
    edges = tuple((f"e{k}", vertices[k], vertices[p]) for k, p in enumerate(parents, 1))
    return Graph(vertices, edges)


@st.composite
def unicyclic(draw, max_vertices=7, cycle_length=None):
    n = draw(st.integers(1, max_vertices))
    s = cycle_length or draw(st.integers(1, n))
    if s > n:
        n = s
    seed = draw(st.integers(0, 2**32 - 1))
    return random_functional_graph(n, s, random.Random(seed))


def in_scope(max_vertices=7):
    return st.one_of(trees(max_vertices), unicyclic(max_vertices))

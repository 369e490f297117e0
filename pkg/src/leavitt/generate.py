"""Graph families for exhaustive and randomized checks.

* :func:`in_trees` -- every connected out-degree-<=1 tree on ``n`` vertices,
  one per isomorphism class (edges point toward the sink).
* :func:`random_functional_graph` -- a random connected out-degree-<=1 graph
  whose cycle has a prescribed length.
* :func:`connected_dags` -- connected acyclic simple digraphs with bounded
  out-degree, up to isomorphism.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from .graph import Graph

__all__ = ["in_trees", "random_functional_graph", "connected_dags", "relabel", "to_networkx"]


def _graph_from_parents(parent, prefix="v", edge_prefix="e") -> Graph:
    n = len(parent)
    vertices = [f"{prefix}{k + 1}" for k in range(n)]
    edges = [(f"{edge_prefix}{k + 1}", vertices[k], vertices[p])
             for k, p in enumerate(parent) if p is not None]
    edges = [(f"{edge_prefix}{i}", s, d) for i, (_, s, d) in enumerate(edges, 1)]
    return Graph(tuple(vertices), tuple(edges))


def _canon(children, v):
    # AHU encoding of the subtree rooted at v
    return "(" + "".join(sorted(_canon(children, c) for c in children[v])) + ")"


def in_trees(n: int, prefix="v", edge_prefix="e") -> list:
    """All unlabeled rooted trees on ``n`` vertices; ``v1`` is the sink."""
    if n < 1:
        return []
    seen = {}

    def grow(parent):
        if len(parent) == n:
            children = [[] for _ in range(n)]
            for k, p in enumerate(parent):
                if p is not None:
                    children[p].append(k)
            seen.setdefault(_canon(children, 0), tuple(parent))
            return
        for p in range(len(parent)):
            grow(parent + [p])

    grow([None])
    return [_graph_from_parents(list(par), prefix, edge_prefix) for _, par in sorted(seen.items())]


def random_functional_graph(n: int, cycle_length: int, rng: random.Random | None = None,
                            prefix="v", edge_prefix="e") -> Graph:
    """Connected graph with out-degree exactly 1 and a cycle ``v1 -> ... -> v_s -> v1``.

    The remaining vertices hang off uniformly random earlier vertices.
    """
    if not 1 <= cycle_length <= n:
        raise ValueError("need 1 <= cycle_length <= n")
    rng = rng or random.Random()
    parent = [(k + 1) % cycle_length for k in range(cycle_length)]
    for k in range(cycle_length, n):
        parent.append(rng.randrange(k))
    return _graph_from_parents(parent, prefix, edge_prefix)


def to_networkx(g: Graph) -> nx.MultiDiGraph:
    h = nx.MultiDiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from((e.src, e.dst) for e in g.edges)
    return h


def relabel(g: Graph, vmap: dict, emap: dict | None = None) -> Graph:
    emap = emap or {}
    return Graph(tuple(vmap[v] for v in g.vertices),
                 tuple((emap.get(e.id, e.id), vmap[e.src], vmap[e.dst]) for e in g.edges))


def connected_dags(n: int, max_out_degree: int = 3) -> list:
    """Connected acyclic simple digraphs on ``n`` vertices, one per isomorphism class.

    Every DAG has a topological labelling, so it suffices to run over subsets
    of the pairs ``i < j`` and discard isomorphic repeats.
    """
    pairs = list(combinations(range(n), 2))
    buckets = {}
    out = []
    for mask in range(1 << len(pairs)):
        chosen = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        outdeg = [0] * n
        for i, _ in chosen:
            outdeg[i] += 1
        if max(outdeg, default=0) > max_out_degree:
            continue
        h = nx.DiGraph()
        h.add_nodes_from(range(n))
        h.add_edges_from(chosen)
        if not nx.is_weakly_connected(h):
            continue
        key = (tuple(sorted(d for _, d in h.out_degree())),
               tuple(sorted(d for _, d in h.in_degree())),
               nx.weisfeiler_lehman_graph_hash(h))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        vertices = tuple(f"v{k + 1}" for k in range(n))
        edges = tuple((f"e{k}", f"v{i + 1}", f"v{j + 1}") for k, (i, j) in enumerate(chosen, 1))
        out.append(Graph(vertices, edges))
    return out

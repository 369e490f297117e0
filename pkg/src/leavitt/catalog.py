"""Small graphs used throughout the docs and tests, shipped as graph files.

Names: ``F`` and ``Fprime`` (out-degree 2, acyclic), ``F1``/``F2`` (graded
isomorphic, cycle length 2), ``G1``/``G2`` (not graded isomorphic), ``E1``
(tree), ``E2`` (cycle of length 2), ``L1`` (one loop).
"""

from importlib import resources

from .graph import Graph, parse_graph

NAMES = ("F", "Fprime", "F1", "F2", "G1", "G2", "E1", "E2", "L1")


def path(name: str):
    if name not in NAMES:
        raise KeyError(name)
    return resources.files(__package__) / "graphs" / f"{name}.graph"


def load(name: str) -> Graph:
    return parse_graph(path(name).read_text(encoding="utf-8"))

"""Normal forms and multiplication in the Leavitt inverse semigroup LI(E).

Every nonzero element is a pair of paths ``(p, q)`` with a common range,
standing for ``p q*``. The pair is reduced: if both paths end in the same edge
``e`` then ``s(e)`` has out-degree at least 2 (otherwise ``e e* = s(e)`` would
shorten it). A vertex ``v`` is the pair of empty paths at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .graph import Graph, GraphError, Path, is_acyclic, paths_into

__all__ = [
    "ZERO", "Element", "normalize", "multiply", "star", "grade",
    "vertex", "edge", "ghost", "enumerate_elements", "assert_graded",
    "DEFAULT_WINDOW", "element_key", "parse_element", "ExpressionError",
]

DEFAULT_WINDOW = 6


class _Zero:
    """The zero of LI(E); shared by every graph."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __mul__(self, other):
        return multiply(self, other)

    def __rmul__(self, other):
        return multiply(other, self)

    @property
    def is_zero(self):
        return True

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


@dataclass(frozen=True)
class Element:
    """The nonzero element ``p q*``; build it with :func:`normalize`."""

    p: Path
    q: Path
    graph: Graph = field(compare=False, repr=False)

    is_zero = False

    @property
    def is_vertex(self) -> bool:
        return not self.p.edges and not self.q.edges

    @property
    def grade(self) -> int:
        return len(self.p) - len(self.q)

    @property
    def length(self) -> int:
        """Total path length ``|p| + |q|`` (the enumeration window measure)."""
        return len(self.p) + len(self.q)

    def factors(self) -> list:
        if self.is_vertex:
            return [self.p.start]
        return list(self.p.edges) + [e + "*" for e in reversed(self.q.edges)]

    def sort_key(self):
        return (len(self.p), self.p.sort_key(), len(self.q), self.q.sort_key())

    def __str__(self):
        return " ".join(self.factors())

    def __mul__(self, other):
        return multiply(self, other)


def normalize(g: Graph, p: Path, q: Path) -> Element:
    """Reduce ``p q*`` by stripping common final edges whose source has out-degree 1."""
    if p.end != q.end:
        raise ValueError(f"p ends at {p.end} but q ends at {q.end}")
    pe, qe = p.edges, q.edges
    end = p.end
    while pe and qe and pe[-1] == qe[-1] and g.out_degree(g.source(pe[-1])) == 1:
        end = g.source(pe[-1])
        pe, qe = pe[:-1], qe[:-1]
    return Element(Path(p.start, pe, end), Path(q.start, qe, end), g)


def _same_graph(a: Element, b: Element):
    if a.graph is not b.graph and a.graph != b.graph:
        raise ValueError("cannot multiply elements of different graphs")


def multiply(a, b):
    """Product in LI(E) via the prefix cases on ``q1`` and ``p2``."""
    if a is ZERO or b is ZERO:
        return ZERO
    _same_graph(a, b)
    p1, q1, p2, q2 = a.p, a.q, b.p, b.q
    if q1.is_prefix_of(p2):
        t = p2.drop_prefix(q1)
        if not t.edges:
            return normalize(a.graph, p1, q2)
        return Element(p1 + t, q2, a.graph)
    if p2.is_prefix_of(q1):
        t = q1.drop_prefix(p2)
        return Element(p1, q2 + t, a.graph)
    return ZERO


def star(a):
    if a is ZERO:
        return ZERO
    return Element(a.q, a.p, a.graph)


def grade(a) -> int:
    if a is ZERO:
        raise ValueError("zero has no grade")
    return a.grade


def vertex(g: Graph, v: str) -> Element:
    if v not in g.out_edges:
        raise GraphError(f"unknown vertex {v!r}")
    return Element(Path(v), Path(v), g)


def edge(g: Graph, e: str) -> Element:
    p = g.path(e)
    return Element(p, Path(p.end), g)


def ghost(g: Graph, e: str) -> Element:
    return star(edge(g, e))


def _reduced_pair(g: Graph, p: Path, q: Path) -> bool:
    if p.edges and q.edges and p.edges[-1] == q.edges[-1]:
        return g.out_degree(g.source(p.edges[-1])) >= 2
    return True


def enumerate_elements(g: Graph, window: int | None = None) -> list:
    """Nonzero elements of LI(E), sorted.

    Acyclic graphs give the whole (finite) semigroup and ignore ``window``.
    Otherwise only elements with ``|p| + |q| <= window`` are listed
    (default :data:`DEFAULT_WINDOW`).
    """
    if is_acyclic(g):
        bound = None
    else:
        bound = DEFAULT_WINDOW if window is None else window
    out = []
    for v in g.vertices:
        into = paths_into(g, v, bound)
        for p, q in product(into, into):
            if bound is not None and len(p) + len(q) > bound:
                continue
            if _reduced_pair(g, p, q):
                out.append(Element(p, q, g))
    out.sort(key=Element.sort_key)
    return out


def assert_graded(elements) -> bool:
    """Check ``grade(ab) == grade(a) + grade(b)`` for every nonzero product landing in the set."""
    elements = list(elements)
    members = set(elements)
    for a, b in product(elements, elements):
        ab = multiply(a, b)
        if ab is ZERO or ab not in members:
            continue
        if ab.grade != a.grade + b.grade:
            return False
    return True


def element_key(a):
    """Sort key usable on a mix of ZERO and elements."""
    if a is ZERO:
        return (-1,)
    return (0,) + a.sort_key()


class ExpressionError(ValueError):
    """Bad element expression; ``position`` is the 1-based token index."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)


def parse_element(g: Graph, text: str):
    """Parse ``e1 e2 e2* e1*``-style expressions (or ``0``) and reduce them.

    Adjacent factors must compose as a walk: ``r(x) == s(y)``.
    """
    tokens = text.split()
    if not tokens:
        raise ExpressionError("empty expression")
    factors = []
    for pos, tok in enumerate(tokens, 1):
        if tok == "0":
            factors.append((pos, ZERO, None, None))
            continue
        name = tok[:-1] if tok.endswith("*") else tok
        is_vertex = name in g.out_edges
        is_edge = name in g.edge
        if is_vertex and is_edge:
            raise ExpressionError(f"{name!r} names both a vertex and an edge", pos)
        if is_vertex:
            # v* = v
            factors.append((pos, vertex(g, name), name, name))
        elif is_edge and tok.endswith("*"):
            factors.append((pos, ghost(g, name), g.range(name), g.source(name)))
        elif is_edge:
            factors.append((pos, edge(g, name), g.source(name), g.range(name)))
        else:
            raise ExpressionError(f"unknown id {name!r}", pos)
    result = None
    prev = None
    for pos, elem, src, dst in factors:
        if prev is not None and src is not None and prev[1] != src:
            raise ExpressionError(
                f"{tokens[prev[0] - 1]} ends at {prev[1]} but {tokens[pos - 1]} starts at {src}", pos)
        if src is not None:
            prev = (pos, dst)
        result = elem if result is None else multiply(result, elem)
    return result

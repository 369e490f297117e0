"""Finite directed multigraphs: parsing, validation, cycles, sinks and relative depth.

Everything here is immutable. Functions that need the "out-degree at most 1,
connected" hypothesis raise :class:`ScopeError` when it does not hold.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path as FilePath

__all__ = [
    "Edge", "Graph", "Path", "Cycle", "ValidationReport",
    "GraphError", "ScopeError",
    "natural_key", "parse_graph", "parse_graph_json", "format_graph", "load_graph",
    "validate", "is_acyclic", "unique_cycle", "unique_sink", "base_paths",
    "relative_depth", "is_ne_path", "paths_into",
]

ID_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class GraphError(ValueError):
    """Malformed graph description."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ScopeError(ValueError):
    """A graph lies outside the hypotheses an operation needs."""


def natural_key(ident: str):
    """Sort key treating digit runs as integers, so ``v2 < v10``."""
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", ident))


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Path:
    """A path ``e1 e2 ... en`` from ``start`` to ``end``.

    The empty path at a vertex ``v`` is ``Path(v, (), v)``.
    """

    start: str
    edges: tuple = ()
    end: str = None

    def __post_init__(self):
        if self.end is None:
            if self.edges:
                raise ValueError("a nonempty path needs an explicit end vertex")
            object.__setattr__(self, "end", self.start)

    def __len__(self):
        return len(self.edges)

    def __add__(self, other: Path) -> Path:
        if self.end != other.start:
            raise ValueError(f"cannot concatenate: {self.end} != {other.start}")
        return Path(self.start, self.edges + other.edges, other.end)

    def is_prefix_of(self, other: Path) -> bool:
        n = len(self.edges)
        return self.start == other.start and other.edges[:n] == self.edges

    def drop_prefix(self, prefix: Path) -> Path:
        """The path ``t`` with ``prefix + t == self``."""
        if not prefix.is_prefix_of(self):
            raise ValueError("not a prefix")
        return Path(prefix.end, self.edges[len(prefix.edges):], self.end)

    def sort_key(self):
        return (len(self.edges), natural_key(self.start),
                tuple(natural_key(e) for e in self.edges))

    def __str__(self):
        return " ".join(self.edges) if self.edges else self.start


@dataclass(frozen=True)
class Cycle:
    path: Path

    @property
    def length(self) -> int:
        return len(self.path)

    @property
    def base(self) -> str:
        return self.path.start

    def __str__(self):
        return str(self.path)


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    max_out_degree: int
    sinks: tuple
    cycle: Cycle | None
    acyclic: bool

    @property
    def theorem_scope(self) -> bool:
        return self.connected and self.max_out_degree <= 1

    def as_dict(self):
        return {
            "connected": self.connected,
            "max_out_degree": self.max_out_degree,
            "sinks": list(self.sinks),
            "cycle": None if self.cycle is None else {
                "edges": list(self.cycle.path.edges), "length": self.cycle.length},
            "acyclic": self.acyclic,
            "theorem_scope": self.theorem_scope,
        }


@dataclass(frozen=True)
class Graph:
    """Finite directed multigraph ``(E0, E1, s, r)``.

    Vertex order and edge order are the order of construction; most outputs
    sort by :func:`natural_key` instead so results do not depend on it.
    """

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(
            e if isinstance(e, Edge) else Edge(*e) for e in self.edges))
        if not self.vertices:
            raise GraphError("a graph needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex id")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate edge id")
        vs = set(self.vertices)
        for e in self.edges:
            if e.src not in vs or e.dst not in vs:
                raise GraphError(f"edge {e.id} has a dangling endpoint")

    @classmethod
    def from_edges(cls, edges, vertices=()):
        """Build from ``(id, src, dst)`` triples; vertices default to first appearance."""
        order = list(dict.fromkeys(list(vertices) + [v for _, s, d in edges for v in (s, d)]))
        return cls(tuple(order), tuple(Edge(*e) for e in edges))

    @cached_property
    def edge(self) -> dict:
        return {e.id: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e.id)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict:
        inc = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.dst].append(e.id)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def sorted_vertices(self) -> tuple:
        return tuple(sorted(self.vertices, key=natural_key))

    def out_degree(self, v: str) -> int:
        return len(self.out_edges[v])

    def source(self, e: str) -> str:
        return self.edge[e].src

    def range(self, e: str) -> str:
        return self.edge[e].dst

    def path(self, *edges: str, start: str | None = None) -> Path:
        """Validated path from edge ids; ``start`` is required for the empty path."""
        if not edges:
            if start not in self.out_edges:
                raise GraphError(f"unknown vertex {start!r}")
            return Path(start)
        for e in edges:
            if e not in self.edge:
                raise GraphError(f"unknown edge {e!r}")
        if start is not None and start != self.source(edges[0]):
            raise GraphError(f"path does not start at {start}")
        for a, b in zip(edges, edges[1:]):
            if self.range(a) != self.source(b):
                raise GraphError(f"edges {a} and {b} do not compose")
        return Path(self.source(edges[0]), tuple(edges), self.range(edges[-1]))

    def contains_path(self, p: Path) -> bool:
        try:
            return self.path(*p.edges, start=p.start) == p
        except GraphError:
            return False


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the line format (``vertex <id>`` / ``edge <id> <src> <dst>``, ``#`` comments)."""
    vertices, edges = [], []
    seen_v, seen_e = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        for a in args:
            if not ID_RE.match(a):
                raise GraphError(f"bad identifier {a!r}", lineno)
        if kind == "vertex" and len(args) == 1:
            if args[0] in seen_v:
                raise GraphError(f"duplicate vertex {args[0]!r}", lineno)
            seen_v[args[0]] = lineno
            vertices.append(args[0])
        elif kind == "edge" and len(args) == 3:
            if args[0] in seen_e:
                raise GraphError(f"duplicate edge {args[0]!r}", lineno)
            seen_e[args[0]] = lineno
            edges.append(tuple(args))
        else:
            raise GraphError(f"cannot parse {line!r}", lineno)
    for eid, s, d in edges:
        for v in (s, d):
            if v not in seen_v:
                raise GraphError(f"edge {eid} has dangling endpoint {v!r}", seen_e[eid])
    if not vertices:
        raise GraphError("no vertices declared")
    return Graph(tuple(vertices), tuple(Edge(*e) for e in edges))


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        vertices = [str(v) for v in data["vertices"]]
        edges = [(e["id"], e["src"], e["dst"]) for e in data.get("edges", [])]
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphError(f"bad JSON graph: {exc}") from exc
    for ident in vertices + [x for e in edges for x in e]:
        if not isinstance(ident, str) or not ID_RE.match(ident):
            raise GraphError(f"bad identifier {ident!r}")
    return Graph(tuple(vertices), tuple(Edge(*e) for e in edges))


def format_graph(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.id} {e.src} {e.dst}" for e in g.edges]
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    path = FilePath(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return parse_graph_json(text)
    return parse_graph(text)


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------

def _connected(g: Graph) -> bool:
    # walks may use edges in either direction
    nbrs = {v: set() for v in g.vertices}
    for e in g.edges:
        nbrs[e.src].add(e.dst)
        nbrs[e.dst].add(e.src)
    start = g.vertices[0]
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for w in nbrs[v] - seen:
            seen.add(w)
            todo.append(w)
    return len(seen) == len(g.vertices)


def is_acyclic(g: Graph) -> bool:
    """True when ``g`` has no non-trivial directed cycle."""
    indeg = {v: len(g.in_edges[v]) for v in g.vertices}
    todo = [v for v in g.vertices if indeg[v] == 0]
    removed = 0
    while todo:
        v = todo.pop()
        removed += 1
        for e in g.out_edges[v]:
            w = g.range(e)
            indeg[w] -= 1
            if indeg[w] == 0:
                todo.append(w)
    return removed == len(g.vertices)


def _rotate_to_min(g: Graph, edges: list) -> Cycle:
    srcs = [g.source(e) for e in edges]
    i = min(range(len(edges)), key=lambda k: natural_key(srcs[k]))
    edges = edges[i:] + edges[:i]
    return Cycle(g.path(*edges))


def _find_cycle(g: Graph) -> Cycle | None:
    colour = {}
    for root in g.sorted_vertices:
        if root in colour:
            continue
        # iterative DFS carrying the edge stack
        stack = [(root, iter(g.out_edges[root]))]
        trail = []
        colour[root] = 1
        while stack:
            v, it = stack[-1]
            e = next(it, None)
            if e is None:
                colour[v] = 2
                stack.pop()
                if trail:
                    trail.pop()
                continue
            w = g.range(e)
            if colour.get(w) == 1:
                k = len(trail)
                while k > 0 and g.source(trail[k - 1]) != w:
                    k -= 1
                if g.source(e) == w:
                    return _rotate_to_min(g, [e])
                return _rotate_to_min(g, trail[k - 1:] + [e])
            if w not in colour:
                colour[w] = 1
                trail.append(e)
                stack.append((w, iter(g.out_edges[w])))
    return None


def validate(g: Graph) -> ValidationReport:
    connected = _connected(g)
    max_out = max(g.out_degree(v) for v in g.vertices)
    sinks = tuple(v for v in g.sorted_vertices if g.out_degree(v) == 0)
    if connected and max_out <= 1:
        cycle = unique_cycle(g)
    else:
        cycle = _find_cycle(g)
    return ValidationReport(connected, max_out, sinks, cycle, cycle is None)


def _require_scope(g: Graph):
    if max(g.out_degree(v) for v in g.vertices) > 1:
        raise ScopeError("graph has a vertex of out-degree greater than 1")
    if not _connected(g):
        raise ScopeError("graph is not connected")


def _successor(g: Graph, v: str):
    out = g.out_edges[v]
    return out[0] if out else None


def unique_cycle(g: Graph) -> Cycle | None:
    """The non-trivial cycle of a connected out-degree-<=1 graph, or None for a tree.

    All cyclic conjugates are equivalent; the one starting at the smallest
    vertex id is returned.
    """
    _require_scope(g)
    v = g.vertices[0]
    seen = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        e = _successor(g, v)
        if e is None:
            return None
        walk.append(e)
        v = g.range(e)
    return _rotate_to_min(g, walk[seen[v]:])


def unique_sink(g: Graph) -> str | None:
    _require_scope(g)
    sinks = [v for v in g.vertices if g.out_degree(v) == 0]
    return sinks[0] if sinks else None


def base_paths(g: Graph, v0: str) -> list:
    """All paths ending at ``v0`` once the edge leaving ``v0`` is removed.

    ``v0`` must be the sink or lie on the cycle. There is exactly one path per
    vertex; the list is ordered by (length, source id).
    """
    _require_scope(g)
    if v0 not in g.out_edges:
        raise ScopeError(f"unknown vertex {v0!r}")
    cycle = unique_cycle(g)
    if cycle is None:
        if g.out_degree(v0) != 0:
            raise ScopeError(f"{v0} is not the sink")
    elif v0 not in {g.source(e) for e in cycle.path.edges}:
        raise ScopeError(f"{v0} is not on the cycle")
    paths = []
    for u in g.vertices:
        edges = []
        v = u
        while v != v0:
            e = _successor(g, v)
            edges.append(e)
            v = g.range(e)
        paths.append(Path(u, tuple(edges), v0))
    paths.sort(key=lambda p: (len(p), natural_key(p.start)))
    return paths


def _cycle_length(g: Graph) -> int:
    cycle = unique_cycle(g)
    return 0 if cycle is None else cycle.length


def relative_depth(g: Graph, v0: str, v: str) -> int:
    s = _cycle_length(g)
    for p in base_paths(g, v0):
        if p.start == v:
            return len(p) % s if s else len(p)
    raise ScopeError(f"unknown vertex {v!r}")


def is_ne_path(g: Graph, p: Path) -> bool:
    """True when every edge of ``p`` leaves a vertex of out-degree 1."""
    return all(g.out_degree(g.source(e)) == 1 for e in p.edges)


def paths_into(g: Graph, v: str, max_len: int | None = None) -> list:
    """All paths ending at ``v``, shortest first; ``max_len`` is mandatory for cyclic graphs."""
    if max_len is None and not is_acyclic(g):
        raise ValueError("max_len is required when the graph has a cycle")
    result = [Path(v)]
    frontier = [Path(v)]
    depth = 0
    while frontier and (max_len is None or depth < max_len):
        depth += 1
        nxt = []
        for p in frontier:
            for e in g.in_edges[p.start]:
                nxt.append(Path(g.source(e), (e,) + p.edges, v))
        result.extend(nxt)
        frontier = nxt
    return result

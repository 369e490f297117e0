"""The contracted semigroup algebra K0 LI(E) over the rationals.

For a finite acyclic graph, ``L_K(E)`` is ``K0 LI(E)`` modulo the ideal
generated by ``v - sum(e e*)`` over vertices ``v`` of out-degree at least 2.
This module builds that quotient explicitly and measures its dimension, so it
can be compared with the per-sink matrix block count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .graph import Graph, natural_key, is_acyclic, paths_into
from .semigroup import ZERO, DEFAULT_WINDOW, edge, enumerate_elements, ghost, multiply, vertex

__all__ = [
    "AlgebraElement", "RowSpace", "ProductTable", "IdealBasis",
    "structure_constants", "ck_ideal_generators", "ideal_basis", "quotient_dimension",
    "lpa_dimension_acyclic", "induced_algebra_iso_check", "MAX_BASIS",
]

MAX_BASIS = 4096


class AlgebraElement:
    """Finite rational combination of nonzero semigroup elements."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for s, c in (coeffs or {}).items():
            if s is ZERO:
                continue
            c = clean.get(s, 0) + Fraction(c)
            if c:
                clean[s] = c
            else:
                clean.pop(s, None)
        self.coeffs = clean

    @classmethod
    def basis(cls, s):
        return cls({s: 1})

    def __add__(self, other):
        acc = dict(self.coeffs)
        for s, c in other.coeffs.items():
            acc[s] = acc.get(s, 0) + c
        return AlgebraElement(acc)

    def __neg__(self):
        return AlgebraElement({s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return AlgebraElement({s: k * c for s, c in self.coeffs.items()})

    def __mul__(self, other):
        acc = {}
        for (a, x), (b, y) in product(self.coeffs.items(), other.coeffs.items()):
            ab = multiply(a, b)
            if ab is not ZERO:
                acc[ab] = acc.get(ab, 0) + x * y
        return AlgebraElement(acc)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def grades(self) -> set:
        return {s.grade for s in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def map(self, f):
        """Linear extension of ``f`` on basis elements."""
        acc = AlgebraElement()
        for s, c in self.coeffs.items():
            acc = acc + AlgebraElement({f(s): c})
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for s, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key()):
            parts.append(f"{'' if c == 1 else '-' if c == -1 else c}{'' if abs(c) == 1 else '*'}({s})")
        return " + ".join(parts).replace("+ -", "- ")


class RowSpace:
    """Incremental row echelon form over the rationals on sparse ``{column: value}`` rows."""

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                return row
            f = row[col]
            for k, v in piv.items():
                x = row.get(k, 0) - f * v
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; False when it was already in the span."""
        row = self.reduce(row)
        if not row:
            return False
        col = min(row)
        lead = row[col]
        self.pivots[col] = {k: v / lead for k, v in row.items()}
        return True

    def __contains__(self, row):
        return not self.reduce(row)


@dataclass(frozen=True)
class ProductTable:
    """Multiplication of a finite contracted semigroup: ``table[i][j]`` is an index or -1."""

    basis: tuple
    table: tuple

    @property
    def index(self):
        return {s: k for k, s in enumerate(self.basis)}

    def __getitem__(self, pair):
        a, b = pair
        idx = self.index
        k = self.table[idx[a]][idx[b]]
        return ZERO if k < 0 else self.basis[k]


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple
    span_dimension: int


def _require_finite(g: Graph, max_size=MAX_BASIS):
    if not is_acyclic(g):
        raise ValueError("graph has a cycle, so LI(E) and L_K(E) are infinite-dimensional")
    basis = enumerate_elements(g)
    if len(basis) > max_size:
        raise ValueError(f"LI(E) has {len(basis)} nonzero elements, above the limit {max_size}")
    return basis


def structure_constants(g: Graph, max_size=MAX_BASIS) -> ProductTable:
    basis = _require_finite(g, max_size)
    index = {s: k for k, s in enumerate(basis)}
    table = tuple(tuple(-1 if (ab := multiply(a, b)) is ZERO else index[ab] for b in basis)
                  for a in basis)
    return ProductTable(tuple(basis), table)


def ck_ideal_generators(g: Graph) -> list:
    """``v - sum(e e*)`` for each vertex of out-degree at least 2."""
    if not is_acyclic(g):
        raise ValueError("graph has a cycle")
    gens = []
    for v in sorted(g.vertices, key=natural_key):
        out = g.out_edges[v]
        if len(out) < 2:
            continue
        x = AlgebraElement.basis(vertex(g, v))
        for e in out:
            x = x - AlgebraElement.basis(multiply(edge(g, e), ghost(g, e)))
        gens.append(x)
    return gens


def ideal_basis(g: Graph, max_size=MAX_BASIS):
    """Echelon basis of the two-sided ideal, as a :class:`RowSpace` over basis indices.

    ``K0 LI(E)`` has the identity ``sum(v)``, so the ideal is spanned by the
    products ``a x b`` with ``a``, ``b`` basis elements and ``x`` a generator
    at ``v``. If ``a = p q*`` with ``q`` nonempty, ``q`` starts with some edge
    ``e`` out of ``v`` and ``a x = a - a e e* = 0``; dually for ``b``. So only
    paths ``a`` into ``v`` and ghost paths ``b`` out of ``v`` are needed.

    Returns ``(basis, IdealBasis, RowSpace)``.
    """
    basis = _require_finite(g, max_size)
    index = {s: k for k, s in enumerate(basis)}
    gens = ck_ideal_generators(g)
    space = RowSpace()
    for x in gens:
        v = next(s for s in x.coeffs if s.is_vertex).p.start
        lefts = [AlgebraElement.basis(a) for a in basis if not a.q.edges and a.p.end == v]
        rights = [AlgebraElement.basis(b) for b in basis if not b.p.edges and b.q.end == v]
        for a in lefts:
            ax = a * x
            for b in rights:
                space.add({index[s]: c for s, c in (ax * b).coeffs.items()})
    return basis, IdealBasis(tuple(gens), space.rank), space


def quotient_dimension(g: Graph, max_size=MAX_BASIS) -> int:
    """``dim K0 LI(E) - dim`` of the Cuntz-Krieger ideal."""
    basis, ideal, _ = ideal_basis(g, max_size)
    return len(basis) - ideal.span_dimension


def lpa_dimension_acyclic(g: Graph) -> int:
    """Sum over sinks of (number of paths ending there) squared."""
    if not is_acyclic(g):
        raise ValueError("graph has a cycle")
    return sum(len(paths_into(g, v)) ** 2 for v in g.vertices if g.out_degree(v) == 0)


def induced_algebra_iso_check(w, window: int = DEFAULT_WINDOW) -> bool:
    """Check that the linear extension of a witness is a graded algebra map on the window.

    For all basis pairs ``a, b`` with ``|p| + |q| <= window``: ``L(ab) == L(a) L(b)``
    in ``K0 LI(F)``, and ``L(a)`` is homogeneous of the degree of ``a``.
    """
    from .classify import witness_map

    phi = witness_map(w)
    basis = enumerate_elements(w.source, window)
    images = {a: AlgebraElement.basis(phi(a)) for a in basis}
    for a, img in images.items():
        if img.grades() != {a.grade}:
            return False
    for a, b in product(basis, basis):
        lhs = AlgebraElement.basis(a) * AlgebraElement.basis(b)
        lhs = lhs.map(phi)
        if lhs != images[a] * images[b]:
            return False
    return True

"""Graded isomorphism of LI(E) and L_K(E) for connected graphs of out-degree at most 1.

Two such graphs are graded isomorphic exactly when their cycles have the same
length ``s`` and, for suitable base vertices on the cycles (or at the sinks,
``s = 0``), the counts of vertices at each relative depth agree. Moving the
base around the cycle rotates the depth histogram, so comparing the
lexicographically least rotation decides the question without a search.

An isomorphism is made explicit by a :class:`Witness`: base paths
``p_1..p_n`` into ``v0`` and ``q_1..q_n`` into ``w0``, a bijection ``sigma``,
a residue shift ``c`` and integers ``lambda_i`` with
``|q_sigma(i)| = |p_i| + c - lambda_i * s``. It sends
``p_i C^k p_j*`` to ``q_sigma(i) D^(k + lambda_i - lambda_j) q_sigma(j)*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graph import (Graph, Path, ScopeError, base_paths, is_acyclic, unique_cycle,
                    unique_sink, validate)
from .semigroup import ZERO, DEFAULT_WINDOW, enumerate_elements, multiply, normalize, vertex
from .shifts import (Descriptor, apply_moves, lpa_descriptor, match_residues,
                     moves_for_matching, moves_from_json, moves_to_json, shift_alignments)

__all__ = [
    "DepthProfile", "CanonicalInvariant", "Witness", "Iso", "NonIso",
    "depth_profile", "canonical_invariant", "default_base", "cycle_bases",
    "decide_graded_iso", "build_witness", "apply_witness", "witness_map", "check_witness",
    "verify_witness", "basis_element", "decompose", "brute_force_iso",
    "compare_cardinality", "certificate_to_json", "verify_certificate",
]


@dataclass(frozen=True)
class DepthProfile:
    """``histogram[d]`` counts vertices at relative depth ``d``.

    For ``step > 0`` the histogram has length ``step``; for trees it runs from
    depth 0 to the maximum depth.
    """

    step: int
    histogram: tuple

    @property
    def total(self):
        return sum(self.histogram)


@dataclass(frozen=True)
class CanonicalInvariant:
    step: int
    canon: tuple

    def as_json(self):
        return {"step": self.step, "canon": list(self.canon)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["step"]), tuple(int(x) for x in data["canon"]))

    def __str__(self):
        return f"({self.step},({','.join(map(str, self.canon))}))"


@dataclass(frozen=True)
class Witness:
    """Basis-level isomorphism LI(source) -> LI(target); ``sigma`` holds 1-based images."""

    source: Graph
    target: Graph
    v0: str
    w0: str
    sigma: tuple
    c: int
    lambdas: tuple

    def as_json(self):
        return {"v0": self.v0, "w0": self.w0, "c": self.c,
                "sigma": list(self.sigma), "lambdas": list(self.lambdas)}


@dataclass(frozen=True)
class Iso:
    witness: Witness
    moves: tuple
    invariant_e: CanonicalInvariant
    invariant_f: CanonicalInvariant

    result = "iso"


@dataclass(frozen=True)
class NonIso:
    invariant_e: CanonicalInvariant
    invariant_f: CanonicalInvariant

    result = "noniso"


# ---------------------------------------------------------------------------
# frames: a graph with a chosen base vertex
# ---------------------------------------------------------------------------

class _Frame:
    def __init__(self, g: Graph, v0: str):
        self.g = g
        self.v0 = v0
        self.paths = base_paths(g, v0)
        cycle = unique_cycle(g)
        self.step = 0 if cycle is None else cycle.length
        self.index = {p.start: i for i, p in enumerate(self.paths)}
        if self.step:
            edges, v = [], v0
            for _ in range(self.step):
                e = g.out_edges[v][0]
                edges.append(e)
                v = g.range(e)
            self.cycle = Path(v0, tuple(edges), v0)
        else:
            self.cycle = None

    def power(self, k: int) -> Path:
        p = Path(self.v0)
        for _ in range(k):
            p = p + self.cycle
        return p

    def compose(self, i: int, k: int, j: int):
        if k and not self.step:
            raise ValueError("a tree has no cycle to raise to a power")
        p = self.paths[i] + self.power(max(k, 0))
        q = self.paths[j] + self.power(max(-k, 0))
        return normalize(self.g, p, q)

    def decompose(self, a):
        if a.graph is not self.g and a.graph != self.g:
            raise ValueError("element is not over this graph")
        i, j = self.index[a.p.start], self.index[a.q.start]
        diff = len(a.p) - len(a.q) - len(self.paths[i]) + len(self.paths[j])
        if self.step:
            k, rem = divmod(diff, self.step)
        else:
            k, rem = 0, diff
        if rem:
            raise AssertionError(f"{a} does not decompose over base {self.v0}")
        return i, k, j


def basis_element(g: Graph, v0: str, i: int, k: int, j: int):
    """``p_i C^k p_j*`` with 1-based indices into ``base_paths(g, v0)``."""
    return _Frame(g, v0).compose(i - 1, k, j - 1)


def decompose(g: Graph, v0: str, a):
    """Inverse of :func:`basis_element`: the 1-based ``(i, k, j)`` of a nonzero element."""
    i, k, j = _Frame(g, v0).decompose(a)
    return i + 1, k, j + 1


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def _require_scope(g: Graph):
    report = validate(g)
    if not report.theorem_scope:
        why = (f"a vertex has out-degree {report.max_out_degree}"
               if report.max_out_degree > 1 else "the graph is not connected")
        raise ScopeError(
            f"classification needs a connected graph with out-degree at most 1, but {why}; "
            "for out-degree >= 2 graded isomorphism of LI(E) and of L_K(E) can differ, "
            "so no decision is made (a cardinality comparison is available for acyclic graphs)")


def default_base(g: Graph) -> str:
    """The sink of a tree, otherwise the start of :func:`unique_cycle`."""
    cycle = unique_cycle(g)
    return unique_sink(g) if cycle is None else cycle.base


def cycle_bases(g: Graph) -> list:
    cycle = unique_cycle(g)
    if cycle is None:
        return [unique_sink(g)]
    return [g.source(e) for e in cycle.path.edges]


def depth_profile(g: Graph, v0: str) -> DepthProfile:
    frame = _Frame(g, v0)
    s = frame.step
    if s:
        hist = [0] * s
        for p in frame.paths:
            hist[len(p) % s] += 1
    else:
        hist = [0] * (max(len(p) for p in frame.paths) + 1)
        for p in frame.paths:
            hist[len(p)] += 1
    return DepthProfile(s, tuple(hist))


def _rotations(hist):
    s = len(hist)
    return [tuple(hist[(d + t) % s] for d in range(s)) for t in range(s)]


def canonical_invariant(g: Graph) -> CanonicalInvariant:
    _require_scope(g)
    prof = depth_profile(g, default_base(g))
    if prof.step:
        return CanonicalInvariant(prof.step, min(_rotations(prof.histogram)))
    return CanonicalInvariant(0, prof.histogram)


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

def build_witness(gE: Graph, gF: Graph, v0: str, w0: str, c: int | None = None) -> Witness:
    """Witness over bases ``v0``, ``w0`` with residue shift ``c``.

    ``c=None`` takes the first shift from :func:`~leavitt.shifts.shift_alignments`.
    Ties between equal-residue base paths go to base-path order.
    """
    fe, ff = _Frame(gE, v0), _Frame(gF, w0)
    if fe.step != ff.step:
        raise ValueError(f"cycle lengths differ: {fe.step} vs {ff.step}")
    if len(fe.paths) != len(ff.paths):
        raise ValueError("vertex counts differ")
    s = fe.step
    a = [len(p) for p in fe.paths]
    b = [len(q) for q in ff.paths]
    candidates = shift_alignments(a, b, s) if c is None else [c]
    for cc in candidates:
        if s == 0 and cc != 0:
            continue
        sigma = match_residues(a, b, s, cc)
        if sigma is None:
            continue
        lambdas = tuple((a[i] + cc - b[j]) // s if s else 0 for i, j in enumerate(sigma))
        return Witness(gE, gF, v0, w0, tuple(j + 1 for j in sigma), cc, lambdas)
    raise ValueError(f"residues of bases {v0} and {w0} do not match for c={c}")


def _frames(w: Witness):
    return _Frame(w.source, w.v0), _Frame(w.target, w.w0)


def _apply(w: Witness, fe: _Frame, ff: _Frame, a):
    if a is ZERO:
        return ZERO
    i, k, j = fe.decompose(a)
    si, sj = w.sigma[i] - 1, w.sigma[j] - 1
    return ff.compose(si, k + w.lambdas[i] - w.lambdas[j], sj)


def apply_witness(w: Witness, a):
    fe, ff = _frames(w)
    return _apply(w, fe, ff, a)


def witness_map(w: Witness):
    """:func:`apply_witness` as a reusable function (base paths computed once)."""
    fe, ff = _frames(w)
    return lambda a: _apply(w, fe, ff, a)


def check_witness(w: Witness, window: int = DEFAULT_WINDOW):
    """First failure found when checking ``w`` on the window, or None if it passes.

    Checks: vertices go bijectively to vertices, the map is injective and
    preserves grades, sources and ranges of ``p`` and ``q`` follow the vertex
    map, and products (including zero products) are preserved.
    """
    try:
        fe, ff = _frames(w)
    except (ScopeError, ValueError) as exc:
        return f"bad bases: {exc}"
    n = len(fe.paths)
    if len(ff.paths) != n or sorted(w.sigma) != list(range(1, n + 1)) or len(w.lambdas) != n:
        return "sigma is not a bijection between base paths"
    if fe.step != ff.step:
        return "cycle lengths differ"

    def phi(a):
        return _apply(w, fe, ff, a)

    vmap = {}
    for v in w.source.vertices:
        img = phi(vertex(w.source, v))
        if not img.is_vertex:
            return f"vertex {v} maps to non-vertex {img}"
        vmap[v] = img.p.start
    if len(set(vmap.values())) != len(w.target.vertices):
        return "vertex map is not a bijection"

    elems = enumerate_elements(w.source, window)
    images = {a: phi(a) for a in elems}
    if len(set(images.values())) != len(images):
        return "map is not injective on the window"
    for a, fa in images.items():
        if fa.grade != a.grade:
            return f"grade of {a} is {a.grade} but its image {fa} has {fa.grade}"
        if fa.p.start != vmap[a.p.start] or fa.q.start != vmap[a.q.start]:
            return f"image {fa} of {a} does not follow the vertex map"
    for a, b in product(elems, elems):
        ab = multiply(a, b)
        lhs = phi(ab)
        rhs = multiply(images[a], images[b])
        if lhs != rhs:
            return f"phi({a} . {b}) = {lhs} but phi({a}) . phi({b}) = {rhs}"
    return None


def verify_witness(w: Witness, window: int = DEFAULT_WINDOW) -> bool:
    return check_witness(w, window) is None


# ---------------------------------------------------------------------------
# decision
# ---------------------------------------------------------------------------

def decide_graded_iso(gE: Graph, gF: Graph, base_e: str | None = None,
                      base_f: str | None = None):
    """Return :class:`Iso` with a witness and move chain, or :class:`NonIso`.

    ``base_e`` / ``base_f`` pick the base vertices used for the witness
    (defaults: :func:`default_base`). They do not affect the decision.
    """
    _require_scope(gE)
    _require_scope(gF)
    inv_e, inv_f = canonical_invariant(gE), canonical_invariant(gF)
    if inv_e != inv_f:
        return NonIso(inv_e, inv_f)
    v0 = default_base(gE) if base_e is None else base_e
    w0 = default_base(gF) if base_f is None else base_f
    w = build_witness(gE, gF, v0, w0)
    d_e, d_f = lpa_descriptor(gE, v0), lpa_descriptor(gF, w0)
    sigma = [j - 1 for j in w.sigma]
    moves = moves_for_matching(d_e.shifts, d_f.shifts, d_e.step, w.c, sigma)
    return Iso(w, tuple(moves), inv_e, inv_f)


def compare_cardinality(gE: Graph, gF: Graph):
    """Heuristic for acyclic graphs of any out-degree: different sizes of LI rule out isomorphism.

    Returns ``("noniso" | "unknown", |LI(E)\\0|, |LI(F)\\0|)``. Equal sizes prove nothing.
    """
    for g in (gE, gF):
        if not is_acyclic(g):
            raise ValueError("cardinality comparison needs finite (acyclic) graphs")
    ne, nf = len(enumerate_elements(gE)), len(enumerate_elements(gF))
    return ("noniso" if ne != nf else "unknown"), ne, nf


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

def certificate_to_json(cert) -> dict:
    data = {"result": cert.result,
            "invariantE": cert.invariant_e.as_json(),
            "invariantF": cert.invariant_f.as_json()}
    if isinstance(cert, Iso):
        data["witness"] = cert.witness.as_json()
        data["moves"] = moves_to_json(cert.moves)
    return data


def verify_certificate(data: dict, gE: Graph, gF: Graph, window: int = DEFAULT_WINDOW):
    """Re-check a certificate against the two graphs; returns None or the first problem."""
    try:
        inv_e = CanonicalInvariant.from_json(data["invariantE"])
        inv_f = CanonicalInvariant.from_json(data["invariantF"])
        result = data["result"]
    except (KeyError, TypeError, ValueError) as exc:
        return f"malformed certificate: {exc}"
    if canonical_invariant(gE) != inv_e or canonical_invariant(gF) != inv_f:
        return "recorded invariants do not match the graphs"
    if result == "noniso":
        return "invariants are equal, so the graphs are isomorphic" if inv_e == inv_f else None
    if result != "iso":
        return f"unknown result {result!r}"
    try:
        wd = data["witness"]
        w = Witness(gE, gF, wd["v0"], wd["w0"], tuple(int(x) for x in wd["sigma"]),
                    int(wd["c"]), tuple(int(x) for x in wd["lambdas"]))
        moves = moves_from_json(data.get("moves", []))
        d_e, d_f = lpa_descriptor(gE, w.v0), lpa_descriptor(gF, w.w0)
        if apply_moves(d_e, moves) != d_f:
            return "move chain does not reach the target descriptor"
    except (KeyError, TypeError, ValueError) as exc:
        return f"malformed witness: {exc}"
    return check_witness(w, window)


# ---------------------------------------------------------------------------
# brute force oracle
# ---------------------------------------------------------------------------

def _table(elems):
    index = {a: k for k, a in enumerate(elems)}
    return [[-1 if (ab := multiply(a, b)) is ZERO else index[ab] for b in elems] for a in elems]


def _signatures(elems, table):
    n = len(elems)
    return [(a.grade, table[x][x] == x,
             sum(table[x][y] != -1 for y in range(n)),
             sum(table[y][x] != -1 for y in range(n)))
            for x, a in enumerate(elems)]


def brute_force_iso(gE: Graph, gF: Graph, max_vertices: int = 6):
    """Search for a grade-preserving semigroup isomorphism LI(E) -> LI(F).

    Only for acyclic graphs (finite semigroups) with at most ``max_vertices``
    vertices. Returns a dict on nonzero elements or None. Uses nothing but
    multiplication and grades, so it is independent of the depth invariant.
    """
    for g in (gE, gF):
        if not is_acyclic(g):
            raise ValueError("brute force needs acyclic graphs")
        if len(g.vertices) > max_vertices:
            raise ValueError(f"more than {max_vertices} vertices")
    A, B = enumerate_elements(gE), enumerate_elements(gF)
    n = len(A)
    if n != len(B):
        return None
    ta, tb = _table(A), _table(B)
    sa, sb = _signatures(A, ta), _signatures(B, tb)
    if sorted(sa) != sorted(sb):
        return None
    cand = [[y for y in range(n) if sb[y] == sa[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: (len(cand[x]), x))
    phi, inv = [-1] * n, [-1] * n
    assigned = []

    def assign(x0, y0):
        mark = len(assigned)
        queue = [(x0, y0)]
        while queue:
            x, y = queue.pop()
            if phi[x] != -1:
                if phi[x] != y:
                    return mark, False
                continue
            if inv[y] != -1 or sa[x] != sb[y]:
                return mark, False
            phi[x], inv[y] = y, x
            assigned.append(x)
            for z in assigned:
                for p, q in ((ta[x][z], tb[y][phi[z]]), (ta[z][x], tb[phi[z]][y])):
                    if (p == -1) != (q == -1):
                        return mark, False
                    if p != -1:
                        queue.append((p, q))
        return mark, True

    def undo(mark):
        while len(assigned) > mark:
            x = assigned.pop()
            inv[phi[x]] = -1
            phi[x] = -1

    def search(pos):
        while pos < n and phi[order[pos]] != -1:
            pos += 1
        if pos == n:
            return True
        x = order[pos]
        for y in cand[x]:
            if inv[y] != -1:
                continue
            mark, ok = assign(x, y)
            if ok and search(pos + 1):
                return True
            undo(mark)
        return False

    if not search(0):
        return None
    return {A[x]: B[phi[x]] for x in range(n)}

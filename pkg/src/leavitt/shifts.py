"""Graded matrix rings ``M_n(K[x^s, x^-s])(g1, ..., gn)`` and their shift vectors.

A :class:`Descriptor` records ``n``, the step ``s`` (0 means the ground field
``K``) and the shift list. Three moves relate graded-isomorphic descriptors:
permuting the shifts, adding a constant to all of them, and moving a single
shift by the degree of a unit of ``K[x^s, x^-s]`` (a nonzero multiple of ``s``).

Indices in moves and matrix units are 1-based, as in ``e_ij``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .graph import Graph, base_paths, is_acyclic, natural_key, paths_into, unique_cycle

__all__ = [
    "LaurentPoly", "laurent_mul", "is_unit",
    "Descriptor", "Permute", "GlobalShift", "UnitShift", "MatrixUnit",
    "entry_degree", "lpa_descriptor", "sink_descriptors", "apply_move", "apply_moves",
    "find_move_sequence", "realize_matrix_iso", "shift_alignments", "match_residues",
    "moves_to_json", "moves_from_json",
]


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

def _check_exp(step, exp):
    if step == 0 and exp != 0:
        raise ValueError("step 0 only allows exponent 0")
    if step and exp % step:
        raise ValueError(f"exponent {exp} is not a multiple of {step}")


@dataclass(frozen=True)
class LaurentPoly:
    """Element of ``K[x^s, x^-s]`` with exact rational coefficients."""

    step: int
    terms: tuple = ()  # sorted ((exponent, Fraction), ...), no zero coefficients

    def __post_init__(self):
        if self.step < 0:
            raise ValueError("step must be nonnegative")
        acc = {}
        for exp, c in self.terms:
            _check_exp(self.step, exp)
            acc[exp] = acc.get(exp, 0) + Fraction(c)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def from_dict(cls, step, coeffs):
        return cls(step, tuple(coeffs.items()))

    @classmethod
    def monomial(cls, step, exp, coeff=1):
        return cls(step, ((exp, coeff),))

    @property
    def coeffs(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.step != self.step:
            raise ValueError(f"step mismatch: {self.step} vs {other.step}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.step, self.terms + other.terms)

    def __neg__(self):
        return LaurentPoly(self.step, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.step, tuple(
            (e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms))

    def inverse(self) -> LaurentPoly:
        if not is_unit(self):
            raise ZeroDivisionError(f"{self} is not invertible")
        (exp, c), = self.terms
        return LaurentPoly.monomial(self.step, -exp, 1 / c)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in reversed(self.terms):
            if exp == 0:
                parts.append(str(c))
            else:
                coef = "" if c == 1 else "-" if c == -1 else str(c)
                parts.append(f"{coef}x^{exp}")
        return " + ".join(parts).replace("+ -", "- ")


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def is_unit(a: LaurentPoly) -> bool:
    """Units of ``K[x^s, x^-s]`` are exactly the nonzero monomials."""
    return len(a.terms) == 1


# ---------------------------------------------------------------------------
# descriptors and moves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Descriptor:
    n: int
    step: int
    shifts: tuple

    def __post_init__(self):
        object.__setattr__(self, "shifts", tuple(self.shifts))
        if self.n < 1 or len(self.shifts) != self.n:
            raise ValueError("need n >= 1 shifts")
        if self.step < 0:
            raise ValueError("step must be nonnegative")

    def residues(self) -> Counter:
        s = self.step
        return Counter(g % s if s else g for g in self.shifts)

    def __str__(self):
        ring = f"K[x^{self.step},x^-{self.step}]" if self.step else "K"
        return f"M{self.n}({ring})({','.join(map(str, self.shifts))})"


@dataclass(frozen=True)
class Permute:
    """New shift ``k`` is old shift ``pi[k]`` (1-based)."""

    pi: tuple

    def __post_init__(self):
        object.__setattr__(self, "pi", tuple(self.pi))

    def __str__(self):
        return f"permute ({','.join(map(str, self.pi))})"


@dataclass(frozen=True)
class GlobalShift:
    delta: int

    def __str__(self):
        return f"shift all by {self.delta:+d}"


@dataclass(frozen=True)
class UnitShift:
    index: int
    delta: int

    def __str__(self):
        return f"shift {self.index} by {self.delta:+d}"


class MatrixUnit(NamedTuple):
    """``e_ij(x^m)``: ``x^m`` in position ``(i, j)``, 1-based."""

    i: int
    j: int
    m: int


def entry_degree(d: Descriptor, i: int, j: int, xdeg: int) -> int:
    if not (1 <= i <= d.n and 1 <= j <= d.n):
        raise IndexError(f"index out of range for n={d.n}")
    _check_exp(d.step, xdeg)
    return xdeg + d.shifts[i - 1] - d.shifts[j - 1]


def lpa_descriptor(g: Graph, v0: str) -> Descriptor:
    """Descriptor of ``L_K(E)`` for a connected out-degree-<=1 graph based at ``v0``."""
    paths = base_paths(g, v0)
    cycle = unique_cycle(g)
    step = 0 if cycle is None else cycle.length
    return Descriptor(len(paths), step, tuple(len(p) for p in paths))


def sink_descriptors(g: Graph) -> list:
    """One ``M_n(K)`` block per sink of a finite acyclic graph (a direct sum)."""
    if not is_acyclic(g):
        raise ValueError("graph has a cycle")
    blocks = []
    for v in sorted(g.vertices, key=natural_key):
        if g.out_degree(v):
            continue
        lengths = sorted(len(p) for p in paths_into(g, v))
        blocks.append(Descriptor(len(lengths), 0, tuple(lengths)))
    return blocks


def _check_move(d: Descriptor, m):
    if isinstance(m, Permute):
        if sorted(m.pi) != list(range(1, d.n + 1)):
            raise ValueError(f"{m.pi} is not a permutation of 1..{d.n}")
    elif isinstance(m, UnitShift):
        if not 1 <= m.index <= d.n:
            raise ValueError(f"index {m.index} out of range")
        if d.step == 0 or m.delta == 0 or m.delta % d.step:
            raise ValueError(f"unit shift {m.delta} is not a nonzero multiple of step {d.step}")
    elif not isinstance(m, GlobalShift):
        raise TypeError(f"not a move: {m!r}")


def apply_move(d: Descriptor, m) -> Descriptor:
    _check_move(d, m)
    g = list(d.shifts)
    if isinstance(m, Permute):
        g = [g[k - 1] for k in m.pi]
    elif isinstance(m, GlobalShift):
        g = [x + m.delta for x in g]
    else:
        g[m.index - 1] += m.delta
    return Descriptor(d.n, d.step, tuple(g))


def apply_moves(d: Descriptor, moves) -> Descriptor:
    for m in moves:
        d = apply_move(d, m)
    return d


def match_residues(a, b, step, c):
    """Pair each ``a[i] + c`` with an unused ``b[j]`` of the same residue mod ``step``.

    Returns the 0-based matching ``sigma`` (``sigma[i] = j``) or None. Ties go
    to the earliest ``j``.
    """
    def res(x):
        return x % step if step else x

    free = {}
    for j, y in enumerate(b):
        free.setdefault(res(y), []).append(j)
    sigma = []
    for x in a:
        bucket = free.get(res(x + c))
        if not bucket:
            return None
        sigma.append(bucket.pop(0))
    return sigma


def shift_alignments(a, b, step):
    """Global shifts ``c`` for which ``a + c`` and ``b`` agree as residue multisets.

    For ``step > 0`` the candidates run through ``0..step-1`` starting from
    the shift that lines up the largest entries of ``a`` and ``b``. For step 0
    the only candidate is ``min(b) - min(a)``.
    """
    if len(a) != len(b):
        return []
    if step == 0:
        c = min(b) - min(a)
        return [c] if sorted(x + c for x in a) == sorted(b) else []
    target = Counter(y % step for y in b)
    start = (max(b) - max(a)) % step
    out = []
    for k in range(step):
        c = (start + k) % step
        if Counter((x + c) % step for x in a) == target:
            out.append(c)
    return out


def moves_for_matching(a, b, step, c, sigma):
    moves = [GlobalShift(c)] if c else []
    for i, (x, j) in enumerate(zip(a, sigma), 1):
        delta = b[j] - (x + c)
        if delta:
            moves.append(UnitShift(i, delta))
    inverse = [0] * len(sigma)
    for i, j in enumerate(sigma):
        inverse[j] = i + 1
    if inverse != list(range(1, len(sigma) + 1)):
        moves.append(Permute(tuple(inverse)))
    return moves


def find_move_sequence(a: Descriptor, b: Descriptor):
    """Moves turning ``a`` into ``b`` (global shift, unit shifts, permutation), or None."""
    if a.n != b.n or a.step != b.step:
        return None
    for c in shift_alignments(a.shifts, b.shifts, a.step):
        sigma = match_residues(a.shifts, b.shifts, a.step, c)
        if sigma is not None:
            return moves_for_matching(a.shifts, b.shifts, a.step, c, sigma)
    return None


def realize_matrix_iso(d: Descriptor, moves):
    """The composite isomorphism on matrix units, as a function ``MatrixUnit -> MatrixUnit``.

    Permutations conjugate by the permutation matrix, global shifts act as
    the identity, and a unit shift at ``i`` conjugates by
    ``diag(1, .., x^delta, .., 1)``.
    """
    steps = []
    cur = d
    for m in moves:
        _check_move(cur, m)
        steps.append(m)
        cur = apply_move(cur, m)

    def image(unit):
        i, j, m = unit
        _check_exp(d.step, m)
        entry_degree(d, i, j, m)
        for mv in steps:
            if isinstance(mv, Permute):
                pos = {old: new for new, old in enumerate(mv.pi, 1)}
                i, j = pos[i], pos[j]
            elif isinstance(mv, UnitShift):
                if i == mv.index:
                    m -= mv.delta
                if j == mv.index:
                    m += mv.delta
        return MatrixUnit(i, j, m)

    return image


def moves_to_json(moves) -> list:
    out = []
    for m in moves:
        if isinstance(m, GlobalShift):
            out.append({"kind": "global", "delta": m.delta})
        elif isinstance(m, UnitShift):
            out.append({"kind": "unit", "index": m.index, "delta": m.delta})
        else:
            out.append({"kind": "permute", "pi": list(m.pi)})
    return out


def moves_from_json(data) -> list:
    moves = []
    for item in data:
        kind = item["kind"]
        if kind == "global":
            moves.append(GlobalShift(int(item["delta"])))
        elif kind == "unit":
            moves.append(UnitShift(int(item["index"]), int(item["delta"])))
        elif kind == "permute":
            moves.append(Permute(tuple(int(k) for k in item["pi"])))
        else:
            raise ValueError(f"unknown move kind {kind!r}")
    return moves

"""The ten acceptance criteria, each checked exactly and reported on one line.

Run with pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import random
import sys
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from leavitt import catalog  # noqa: E402
from leavitt.classify import (Iso, NonIso, apply_witness, basis_element, brute_force_iso,  # noqa: E402
                              compare_cardinality, decide_graded_iso, verify_witness)
from leavitt.algebra import lpa_dimension_acyclic, quotient_dimension  # noqa: E402
from leavitt.generate import in_trees, random_functional_graph, relabel  # noqa: E402
from leavitt.semigroup import ZERO, enumerate_elements, multiply, normalize, star  # noqa: E402
from leavitt.shifts import Descriptor, LaurentPoly, is_unit, lpa_descriptor, sink_descriptors  # noqa: E402

import oracles  # noqa: E402
from test_semigroup import F_LISTED, FPRIME_LISTED  # noqa: E402
from test_shifts import all_step2_polys  # noqa: E402


def _primed(g):
    return relabel(g, {v: "w" + v[1:] for v in g.vertices}, {e.id: "f" + e.id[1:] for e in g.edges})


def c1():
    got = [str(a) for a in enumerate_elements(catalog.load("F"))]
    ok = len(got) == 22 and set(got) == set(F_LISTED)
    return ok, f"|LI(F)\\0| = {len(got)}, listed set {'matches' if ok else 'differs'}"


def c2():
    gF, gP = catalog.load("F"), catalog.load("Fprime")
    got = [str(a) for a in enumerate_elements(gP)]
    verdict, ne, nf = compare_cardinality(gF, gP)
    ok = len(got) == 19 and set(got) == set(FPRIME_LISTED) and verdict == "noniso"
    return ok, f"|LI(F')\\0| = {len(got)}, cardinality {ne} vs {nf} -> {verdict}"


def c3():
    d1 = lpa_descriptor(catalog.load("F1"), "v3")
    d2 = lpa_descriptor(catalog.load("F2"), "w2")
    ok = d1 == Descriptor(4, 2, (0, 1, 1, 2)) and d2 == Descriptor(4, 2, (0, 1, 2, 3))
    return ok, f"{d1} and {d2}"


def c4():
    E, F = catalog.load("F1"), catalog.load("F2")
    cert = decide_graded_iso(E, F, base_e="v3", base_f="w2")
    if not isinstance(cert, Iso):
        return False, "not ISO"
    w = cert.witness
    bad = []
    for k in range(-3, 4):
        rows = [((2, 2), (1, 1, k)), ((2, 1), (1, 2, k + 1))]
        rows += [((i, j), (i, j, k)) for i, j in product((3, 4), repeat=2)]
        for (i, j), (a, b, kk) in rows:
            if apply_witness(w, basis_element(E, "v3", i, k, j)) != basis_element(F, "w2", a, kk, b):
                bad.append((i, k, j))
    verified = verify_witness(w, 6)
    return (not bad and verified,
            f"ISO, c={w.c} sigma={w.sigma} lambda={w.lambdas}, "
            f"{len(bad)} table mismatches for k=-3..3, window 6 {'verified' if verified else 'FAILED'}")


def c5():
    cert = decide_graded_iso(catalog.load("G1"), catalog.load("G2"))
    ok = (isinstance(cert, NonIso) and (cert.invariant_e.step, cert.invariant_e.canon) == (2, (2, 2))
          and (cert.invariant_f.step, cert.invariant_f.canon) == (2, (1, 3)))
    return ok, f"NON-ISO, {cert.invariant_e} vs {cert.invariant_f}"


def c6():
    g = catalog.load("F")
    q, s = quotient_dimension(g), lpa_dimension_acyclic(g)
    blocks = [str(d) for d in sink_descriptors(g)]
    ok = q == 18 == s and blocks == ["M3(K)(0,1,2)"] * 2
    return ok, f"quotient {q}, sink formula {s}, blocks {' + '.join(blocks)}"


def _laws(members, check_assoc=True):
    for a, b in product(members, members):
        ab = multiply(a, b)
        if ab is not ZERO and ab.grade != a.grade + b.grade:
            return f"grading fails at {a}, {b}"
    for a in members:
        if multiply(multiply(a, star(a)), a) != a:
            return f"a a* a != a at {a}"
        if normalize(a.graph, a.p, a.q) != a:
            return f"normal form not stable at {a}"
    if check_assoc:
        for a, b, c in product(members, repeat=3):
            if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
                return f"associativity fails at {a}, {b}, {c}"
    return None


def c7():
    sets = {"F": enumerate_elements(catalog.load("F")),
            "E1": enumerate_elements(catalog.load("E1")),
            "E2 (window 6)": enumerate_elements(catalog.load("E2"), 6)}
    for name, elems in sets.items():
        problem = _laws(elems)
        if problem:
            return False, f"{name}: {problem}"
    counted = 0
    for n in range(1, 7):
        for t in in_trees(n):
            counted += 1
            if len(enumerate_elements(t)) != n * n:
                return False, f"tree count law fails on {t}"
    return True, f"laws hold on F, E1, E2 (window 6); n^2 law on {counted} trees with <= 6 vertices"


def c8():
    trees = [t for n in range(1, 6) for t in in_trees(n)]
    pairs = iso = 0
    for a, b in product(trees, [_primed(t) for t in trees]):
        pairs += 1
        decided = decide_graded_iso(a, b).result == "iso"
        if decided != (brute_force_iso(a, b) is not None):
            return False, f"disagreement on {a} / {b}"
        iso += decided
    return True, f"{pairs} tree pairs agree ({iso} isomorphic)"


def c9():
    rng = random.Random(2024)
    iso = 0
    for k in range(50):
        n = rng.randint(1, 8)
        m = n if k % 2 == 0 else rng.randint(1, 8)
        a = random_functional_graph(n, 1, rng)
        b = _primed(random_functional_graph(m, 1, rng))
        cert = decide_graded_iso(a, b)
        if (cert.result == "iso") != (n == m):
            return False, f"pair {k}: {n} vs {m} vertices gave {cert.result}"
        if cert.result == "iso" and not verify_witness(cert.witness, 4):
            return False, f"pair {k}: witness fails"
        iso += cert.result == "iso"
    return True, f"50 loop-graph pairs, {iso} ISO exactly when vertex counts agree"


def c10():
    total = units = 0
    for a in all_step2_polys():
        total += 1
        invertible = oracles.laurent_inverse(a.coeffs, 2, 12) is not None
        if is_unit(a) != invertible:
            return False, f"mismatch at {a}"
        units += invertible
    if is_unit(LaurentPoly(2)):
        return False, "zero reported as a unit"
    return True, f"{total} polynomials, {units} units, all of them monomials"


CRITERIA = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10]


def _report(n, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    return ok, line


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n):
    from conftest import ACCEPTANCE_LINES

    ok, line = _report(n, CRITERIA[n - 1])
    ACCEPTANCE_LINES.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [_report(n, fn)[0] for n, fn in enumerate(CRITERIA, 1)]
    sys.exit(0 if all(results) else 1)

from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from leavitt.algebra import (AlgebraElement, RowSpace, ck_ideal_generators, ideal_basis,
                             lpa_dimension_acyclic, quotient_dimension, structure_constants)
from leavitt.generate import connected_dags, in_trees
from leavitt.semigroup import ZERO, edge, ghost, multiply, vertex


def test_branching_tree_dimensions(graphs):
    g = graphs["F"]
    basis, ideal, _ = ideal_basis(g)
    assert len(basis) == 22
    assert ideal.span_dimension == 4
    assert quotient_dimension(g) == 18 == lpa_dimension_acyclic(g)


def test_fprime_has_same_algebra_dimension(graphs):
    assert quotient_dimension(graphs["Fprime"]) == 18 == lpa_dimension_acyclic(graphs["Fprime"])


def test_generators(graphs):
    g = graphs["F"]
    (x,) = ck_ideal_generators(g)
    expect = (AlgebraElement.basis(vertex(g, "v2"))
              - AlgebraElement.basis(multiply(edge(g, "e2"), ghost(g, "e2")))
              - AlgebraElement.basis(multiply(edge(g, "e3"), ghost(g, "e3"))))
    assert x == expect
    assert x.is_homogeneous() and x.grades() == {0}
    assert ck_ideal_generators(graphs["E1"]) == []


def test_no_relations_means_no_quotient(graphs):
    g = graphs["E1"]
    assert quotient_dimension(g) == 9 == lpa_dimension_acyclic(g)


def test_cyclic_graphs_rejected(graphs):
    for f in (quotient_dimension, lpa_dimension_acyclic, ck_ideal_generators, structure_constants):
        with pytest.raises(ValueError):
            f(graphs["E2"])


def test_size_limit(graphs):
    with pytest.raises(ValueError, match="limit"):
        quotient_dimension(graphs["F"], max_size=10)


def test_structure_constants(graphs):
    g = graphs["F"]
    pt = structure_constants(g)
    for a, b in product(pt.basis, pt.basis):
        assert pt[a, b] == multiply(a, b)


def test_zero_is_dropped(graphs):
    g = graphs["F"]
    x = AlgebraElement({ZERO: 3, vertex(g, "v1"): 2})
    assert x == AlgebraElement.basis(vertex(g, "v1")).scale(2)
    assert not (x - x)


def test_algebra_product_is_bilinear(graphs):
    g = graphs["F"]
    a = AlgebraElement({edge(g, "e1"): 2, vertex(g, "v1"): Fraction(1, 2)})
    b = AlgebraElement({edge(g, "e2"): 1, ghost(g, "e1"): -1})
    left = a * b
    right = sum((AlgebraElement.basis(multiply(s, t)).scale(x * y)
                 for (s, x), (t, y) in product(a.coeffs.items(), b.coeffs.items())),
                AlgebraElement())
    assert left == right
    assert repr(AlgebraElement()) == "0"


def test_sink_law_on_trees():
    for n in range(1, 7):
        for t in in_trees(n):
            assert lpa_dimension_acyclic(t) == n * n


@pytest.mark.parametrize("n", range(1, 6))
def test_dimension_agreement_small(n):
    for g in connected_dags(n):
        assert quotient_dimension(g) == lpa_dimension_acyclic(g)


@pytest.mark.slow
def test_dimension_agreement_six_vertices():
    graphs = connected_dags(6)
    assert len(graphs) == 3719
    for g in graphs:
        assert quotient_dimension(g) == lpa_dimension_acyclic(g)


matrices = st.integers(1, 6).flatmap(lambda c: st.lists(
    st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=7))


@settings(max_examples=80)
@given(matrices)
def test_row_space_rank_matches_sympy(rows):
    space = RowSpace()
    for row in rows:
        space.add({k: v for k, v in enumerate(row) if v})
    assert space.rank == sympy.Matrix(rows).rank()
    for row in rows:
        assert {k: v for k, v in enumerate(row) if v} in space

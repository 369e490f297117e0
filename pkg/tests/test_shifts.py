from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from leavitt.shifts import (Descriptor, GlobalShift, LaurentPoly, MatrixUnit, Permute, UnitShift,
                            apply_move, apply_moves, entry_degree, find_move_sequence, is_unit,
                            laurent_mul, lpa_descriptor, moves_from_json, moves_to_json,
                            realize_matrix_iso, shift_alignments, sink_descriptors)

import oracles


def all_step2_polys():
    exps = range(-6, 7, 2)
    for size in range(1, 4):
        for support in combinations(exps, size):
            for coeffs in product((-2, -1, 1, 2), repeat=size):
                yield LaurentPoly(2, tuple(zip(support, coeffs)))


class TestLaurent:
    def test_arithmetic(self):
        a = LaurentPoly.from_dict(2, {0: 1, 2: 1})
        b = LaurentPoly.from_dict(2, {0: 1, 2: -1})
        assert laurent_mul(a, b) == LaurentPoly.from_dict(2, {0: 1, 4: -1})
        assert (a - a).is_zero
        assert str(a) == "x^2 + 1"

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            LaurentPoly.monomial(2, 3)
        with pytest.raises(ValueError):
            LaurentPoly.monomial(0, 1)

    def test_step_mismatch(self):
        with pytest.raises(ValueError):
            LaurentPoly.monomial(2, 2) * LaurentPoly.monomial(3, 3)

    def test_inverse(self):
        a = LaurentPoly.monomial(2, -4, 2)
        one = LaurentPoly.monomial(2, 0)
        assert a * a.inverse() == one
        with pytest.raises(ZeroDivisionError):
            LaurentPoly.from_dict(2, {0: 1, 2: 1}).inverse()
        assert not is_unit(LaurentPoly(2))


def test_units_are_the_invertible_polynomials():
    count = 0
    for a in all_step2_polys():
        inv = oracles.laurent_inverse(a.coeffs, 2, 12)
        assert is_unit(a) == (inv is not None), str(a)
        count += 1
    assert count == 7 * 4 + 21 * 16 + 35 * 64


class TestDescriptors:
    def test_cycle_descriptors(self, graphs):
        assert lpa_descriptor(graphs["F1"], "v3") == Descriptor(4, 2, (0, 1, 1, 2))
        assert lpa_descriptor(graphs["F2"], "w2") == Descriptor(4, 2, (0, 1, 2, 3))
        assert str(lpa_descriptor(graphs["F1"], "v3")) == "M4(K[x^2,x^-2])(0,1,1,2)"

    def test_tree_descriptor(self, graphs):
        d = lpa_descriptor(graphs["E1"], "v2")
        assert (d.n, d.step, d.shifts) == (3, 0, (0, 1, 1))
        assert str(d) == "M3(K)(0,1,1)"

    def test_branching_tree_blocks(self, graphs):
        assert [str(d) for d in sink_descriptors(graphs["F"])] == ["M3(K)(0,1,2)"] * 2
        with pytest.raises(ValueError):
            sink_descriptors(graphs["E2"])

    def test_invalid(self):
        with pytest.raises(ValueError):
            Descriptor(2, 0, (0,))

    def test_entry_degree(self):
        d = Descriptor(3, 2, (0, 1, 1))
        assert entry_degree(d, 2, 1, 4) == 5
        with pytest.raises(IndexError):
            entry_degree(d, 4, 1, 0)


class TestMoves:
    def test_each_move(self):
        d = Descriptor(3, 2, (0, 1, 4))
        assert apply_move(d, Permute((3, 1, 2))).shifts == (4, 0, 1)
        assert apply_move(d, GlobalShift(-1)).shifts == (-1, 0, 3)
        assert apply_move(d, UnitShift(3, -4)).shifts == (0, 1, 0)

    @pytest.mark.parametrize("move", [UnitShift(1, 1), UnitShift(1, 0), UnitShift(4, 2),
                                      Permute((1, 1, 2))])
    def test_rejected(self, move):
        with pytest.raises(ValueError):
            apply_move(Descriptor(3, 2, (0, 1, 4)), move)

    def test_no_unit_shifts_over_a_field(self):
        with pytest.raises(ValueError):
            apply_move(Descriptor(2, 0, (0, 1)), UnitShift(1, 2))

    def test_cycle_pair_chain(self, graphs):
        a = lpa_descriptor(graphs["F1"], "v3")
        b = lpa_descriptor(graphs["F2"], "w2")
        moves = find_move_sequence(a, b)
        assert apply_moves(a, moves) == b
        assert moves[0] == GlobalShift(1)

    def test_unreachable(self):
        a = Descriptor(4, 2, (0, 0, 1, 1))
        b = Descriptor(4, 2, (0, 1, 1, 1))
        assert find_move_sequence(a, b) is None
        assert shift_alignments(a.shifts, b.shifts, 2) == []

    def test_alignment_order(self):
        # starts at the shift lining up the largest entries
        assert shift_alignments((0, 1), (0, 1), 2) == [0, 1]
        assert shift_alignments((0, 2), (1, 3), 2) == [1]

    def test_json_round_trip(self):
        moves = [GlobalShift(1), UnitShift(2, -2), Permute((2, 1, 3))]
        assert moves_from_json(moves_to_json(moves)) == moves
        with pytest.raises(ValueError):
            moves_from_json([{"kind": "flip"}])


descriptors = st.integers(1, 5).flatmap(lambda n: st.builds(
    Descriptor, st.just(n), st.sampled_from([0, 1, 2, 3]),
    st.lists(st.integers(-4, 4), min_size=n, max_size=n)))


@st.composite
def descriptor_and_moves(draw):
    d = draw(descriptors)
    moves = []
    for _ in range(draw(st.integers(0, 5))):
        kind = draw(st.sampled_from(["p", "g", "u"] if d.step else ["p", "g"]))
        if kind == "p":
            moves.append(Permute(tuple(draw(st.permutations(range(1, d.n + 1))))))
        elif kind == "g":
            moves.append(GlobalShift(draw(st.integers(-3, 3))))
        else:
            k = draw(st.integers(1, 2)) * draw(st.sampled_from([-1, 1]))
            moves.append(UnitShift(draw(st.integers(1, d.n)), k * d.step))
    return d, moves


@given(descriptor_and_moves())
def test_moves_found_between_move_related_descriptors(pair):
    d, moves = pair
    target = apply_moves(d, moves)
    found = find_move_sequence(d, target)
    assert found is not None
    assert apply_moves(d, found) == target


@given(descriptor_and_moves())
def test_realized_iso_preserves_degree_and_products(pair):
    d, moves = pair
    target = apply_moves(d, moves)
    phi = realize_matrix_iso(d, moves)
    s = d.step
    xs = [k * s for k in range(-2, 3)] if s else [0]
    units = [MatrixUnit(i, j, m) for i in range(1, d.n + 1) for j in range(1, d.n + 1) for m in xs]
    images = {u: phi(u) for u in units}
    assert len(set(images.values())) == len(units)
    for u, v in images.items():
        assert entry_degree(target, *v) == entry_degree(d, *u)
    for u, w in product(units, units):
        if u.j == w.i:
            uv, vw = images[u], images[w]
            assert uv.j == vw.i
            assert phi(MatrixUnit(u.i, w.j, u.m + w.m)) == MatrixUnit(uv.i, vw.j, uv.m + vw.m)

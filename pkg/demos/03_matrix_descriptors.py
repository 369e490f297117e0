"""Graded matrix rings behind the classification.

For a graph with one cycle of length s, L_K(E) is a ring of n x n matrices
over K[x^s, x^-s] with a shift attached to each row. Three moves relate
isomorphic ones, and each move is realised by conjugation on matrix units.
"""

from leavitt import catalog, find_move_sequence, lpa_descriptor, realize_matrix_iso
from leavitt.shifts import MatrixUnit, apply_move, entry_degree

d1 = lpa_descriptor(catalog.load("F1"), "v3")
d2 = lpa_descriptor(catalog.load("F2"), "w2")
print(d1, "vs", d2)

moves = find_move_sequence(d1, d2)
d = d1
for m in moves:
    d = apply_move(d, m)
    print(f"  {str(m):<18} {d}")

phi = realize_matrix_iso(d1, moves)
for unit in [MatrixUnit(1, 2, 0), MatrixUnit(2, 4, 2), MatrixUnit(3, 3, -2)]:
    img = phi(unit)
    print(f"  e{unit.i}{unit.j}(x^{unit.m}) deg {entry_degree(d1, *unit)}"
          f"  ->  e{img.i}{img.j}(x^{img.m}) deg {entry_degree(d2, *img)}")

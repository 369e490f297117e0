"""Deciding graded isomorphism for graphs with one cycle.

F1 and F2 both have a 2-cycle with two trees hanging off it; G1 and G2 too.
The decision only looks at how many vertices sit at each depth mod 2.
"""

from leavitt import (basis_element, catalog, canonical_invariant, decide_graded_iso,
                     apply_witness, depth_profile, verify_witness)

F1, F2 = catalog.load("F1"), catalog.load("F2")
G1, G2 = catalog.load("G1"), catalog.load("G2")

for name, g in [("F1", F1), ("F2", F2), ("G1", G1), ("G2", G2)]:
    print(f"{name}: canonical invariant {canonical_invariant(g)}")

# the histogram depends on the base vertex, but only up to rotation
print("G2 at w3:", depth_profile(G2, "w3").histogram, " at w4:", depth_profile(G2, "w4").histogram)

cert = decide_graded_iso(G1, G2)
print("G1 vs G2:", cert.result)

cert = decide_graded_iso(F1, F2, base_e="v3", base_f="w2")
w = cert.witness
print("F1 vs F2:", cert.result, w.as_json())

# p_i C^k p_j* in LI(F1) goes to q_sigma(i) D^(k + lambda_i - lambda_j) q_sigma(j)*
for i, k, j in [(2, 0, 2), (2, 1, 1), (3, -1, 4)]:
    a = basis_element(F1, "v3", i, k, j)
    print(f"  p{i} C^{k} p{j}* = {a}  ->  {apply_witness(w, a)}")

print("checked on |p|+|q| <= 6:", verify_witness(w, 6))

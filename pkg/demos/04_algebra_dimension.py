"""The Leavitt path algebra of an acyclic graph as a quotient.

L_K(E) is the contracted semigroup algebra of LI(E) divided by the ideal
generated by v - sum(e e*) at branching vertices. For F and F' the quotients
agree even though the semigroups have different sizes.
"""

from leavitt import (catalog, ck_ideal_generators, compare_cardinality, lpa_dimension_acyclic,
                     quotient_dimension, sink_descriptors)

F, Fp = catalog.load("F"), catalog.load("Fprime")

for name, g in [("F", F), ("F'", Fp)]:
    print(f"{name}: generators {ck_ideal_generators(g)}")
    print(f"    quotient dimension {quotient_dimension(g)}, per-sink count {lpa_dimension_acyclic(g)}")
    print("    blocks:", " + ".join(map(str, sink_descriptors(g))))

verdict, n_f, n_fp = compare_cardinality(F, Fp)
print(f"|LI(F)| = {n_f}, |LI(F')| = {n_fp}: semigroups {verdict}, algebras of equal dimension")

"""Walk through LI(F) for the small branching tree F.

F has edges e1: v1 -> v2, e2: v2 -> v3, e3: v2 -> v4. Its inverse semigroup
is finite, so we can list it, multiply in it and look at the grading.
"""

from collections import Counter

from leavitt import catalog, enumerate_elements, parse_element

F = catalog.load("F")
elems = enumerate_elements(F)
print(f"LI(F) has {len(elems)} nonzero elements:")
print("  " + ", ".join(map(str, elems)))

# grade = |p| - |q| for p q*
print("grades:", dict(sorted(Counter(a.grade for a in elems).items())))

# e1 e1* collapses to v1 because v1 has a single outgoing edge,
# while v2 has two, so e2 e2* stays as it is
for text in ["e1 e1*", "e2 e2*", "e2* e3", "e2* e2", "e1 e2 e2* e1*"]:
    print(f"{text:>16}  =  {parse_element(F, text)}")

a = parse_element(F, "e1 e2")
b = parse_element(F, "e2* e1*")
print(f"({a}) ({b}) = {a * b}")
print(f"({b}) ({a}) = {b * a}")

"""
A five-component linking matrix with trivial quotient
=====================================================
"""
from milnor import TRIVIAL_FIVE, AltVector, classes_equal, quotient_group, relator
from milnor.alternating import triples, unit

print(TRIVIAL_FIVE)
print("M =", quotient_group(TRIVIAL_FIVE))

# the relators are short enough to read by eye
for j, k in [(3, 1), (1, 2), (4, 1), (1, 4)]:
    print(f"v_{j}{k} =", relator(TRIVIAL_FIVE, j, k))

# so every basis vector dies in the quotient
zero = AltVector.zero(5)
print(all(classes_equal(TRIVIAL_FIVE, unit(*t, 5), zero) for t in triples(5)))

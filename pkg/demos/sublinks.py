"""
Deleting a component
====================

Forgetting component c sends X[i,j,k] to zero when c is among i, j, k and
relabels the rest.  The map carries relators onto relators, so the quotient
for the sublink is a quotient of the original.
"""
import random

from milnor import LinkingMatrix, delete_component, mod2_rank, project, quotient_group, verify_surjection
from milnor.alternating import AltVector

rng = random.Random(3)
lam = LinkingMatrix.from_upper(6, [rng.randint(-2, 2) for _ in range(15)])
print(lam)
print("M(6) =", quotient_group(lam), " mod-2 rank", mod2_rank(lam))

for c in range(1, 7):
    sub = delete_component(lam, c)
    print(f"drop {c}: M(5) = {quotient_group(sub)}  mod-2 rank {mod2_rank(sub)}")

v = AltVector.from_coeffs(6, list(range(1, 21)))
print(project(v, 2))
print(verify_surjection(lam, 2))

"""
Clasp-words, Borromean moves and realization
============================================

Clasp-word data stands in for a surface system.  A Borromean move changes
the triple linking class by one basis vector and leaves the linking numbers
alone; enough moves reach any class.
"""
from milnor import (
    LinkingMatrix,
    SurfaceSystemData,
    borromean_move,
    coset_reduce,
    derive_linking_matrix,
    parse_target,
    realize,
    total_triple_linking,
)

F = SurfaceSystemData.from_strings(["x2 x3", "x1 x3^-1 x3 x4", "x1 x4^-1 x4", "x2"])
lam = derive_linking_matrix(F)
print(lam)
print("mu(F) =", total_triple_linking(F).rep)

G = borromean_move(F, 1, 2, 4, +1)
print("after +X[1,2,4]:")
for k, w in enumerate(G.words, 1):
    print(f"  w_{k} = {w}")
print("mu(G) =", total_triple_linking(G).rep)

# realize an arbitrary class over a fixed linking matrix
lam = LinkingMatrix.from_upper(4, [1, 0, 0, 0, 0, 0])
target = parse_target("+2*X[1,2,3] -1*X[2,3,4]", 4)
H, moves = realize(lam, target)
print(len(moves), "moves:", " ".join(map(str, moves)))
print("reduced:", coset_reduce(lam, total_triple_linking(H).rep), "==", coset_reduce(lam, target))

"""
Total Milnor quotient of a linking matrix
=========================================

Build a few linking matrices, present the quotient and read off its
invariant factors.
"""
from milnor import LinkingMatrix, mod2_rank, presentation_matrix, quotient_group, rank

# four components, every pair linking once
ones = LinkingMatrix.from_rows([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]])
print(ones)
P = presentation_matrix(ones)
print("generators x relators:", P.rows, "x", P.cols)
print("M =", quotient_group(ones))    # Z: the triple linking numbers alone say nothing here

# no linking at all leaves every generator free
print("zero 4x4:", quotient_group(LinkingMatrix.zeros(4)))

# larger linking numbers introduce torsion
lam = LinkingMatrix.from_upper(4, [2, 0, 4, 6, 0, 2])
print("M =", quotient_group(lam), " rank", rank(lam), " mod-2 rank", mod2_rank(lam))

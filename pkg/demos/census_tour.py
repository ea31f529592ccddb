"""
Mod-2 rank census
=================

Every 0/1 linking matrix with n components, grouped by the Z/2-rank of the
quotient tensored with Z/2.
"""
import sys

from milnor import find_rank, run_census

for n in (4, 5, 6):
    result = run_census(n, threads=2 if n == 6 else 1)
    print(f"n = {n}: {result.total} matrices, {result.elapsed:.2f}s")
    print(result.format_table())
    print("smallest rank:", result.min_rank())
    print()

# the only 4x4 matrix keeping all four generators is the unlinked one
print(find_rank(4, 4)[0])

# n = 7 takes minutes rather than seconds
if "--seven" in sys.argv:
    print(run_census(7, threads=4).format_table())

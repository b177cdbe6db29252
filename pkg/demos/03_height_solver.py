"""
Pinning down heights by exhaustive search
=========================================

Given k - l, the number of characters of each height is forced by an
integer identity: the squared norms 4^h o^2 (o odd) of one decomposition
column add up to |D|. The search below lists every way that can happen.
"""

from dihedral_blocks.fusion import FusionSystem
from dihedral_blocks.group import Params
from dihedral_blocks.invariants import (
    block_invariants,
    k_minus_l,
    l_lower_bound,
    l_upper_bound,
    solve_height_distribution,
)

p = Params(3, 1)
fs = FusionSystem(p, "aa")
S = k_minus_l(fs)
target, cap = p.order, 2 ** (p.m + 2)

print(f"S = k - l = {S}, target = {target}, k0 <= {cap}")
print("largest l allowed by 4k - 3k0 <= |D|:", l_upper_bound(S, target, cap))

###############################################################################
# Without a lower bound on l there is a spurious solution with l = 1.

for sol in solve_height_distribution(S, 1, 3, target, cap):
    print(f"  l={sol.l} k={sol.k} k0={sol.k0} k1={sol.k1} entries={sol.entries()}")

###############################################################################
# With l >= 2 only one profile is left.

lo = l_lower_bound(fs)
print(f"with l >= {lo}:", [s.to_json() for s in solve_height_distribution(S, lo, 3, target, cap)])
print(block_invariants(fs))

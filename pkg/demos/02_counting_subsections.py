"""
Counting k(B) - l(B) from subsections
=====================================

Each subsection contributes the number of Brauer characters of its
dominated block. Non-major ones are nilpotent; major ones split into
three families, and two of them recurse to a smaller defect group.
"""

from dihedral_blocks.fusion import FusionSystem, major_split, quotient_type, subcase_of_major
from dihedral_blocks.group import Params
from dihedral_blocks.invariants import k_minus_l, k_minus_l_terms

p = Params(3, 2)
fs = FusionSystem(p, "aa", "z", "uz")

U, V, W = major_split(fs)
print("U:", [str(u) for u in U])
print("V:", [str(v) for v in V])
print("W:", [str(w) for w in W])

###############################################################################
# Which case does each major subsection inherit, and over which quotient?

for u in V + W:
    print(f"  {u!s:6} -> case {subcase_of_major(u, fs).value}, D/<u> = D_{{2^n'}} x C_{{2^m'}} with (n', m') = {quotient_type(u, p)}")

###############################################################################
# The full ledger of contributions, and its total.

for rep, kind, l in k_minus_l_terms(fs):
    print(f"  {rep:8} {kind:9} l = {l}")
print("k - l =", k_minus_l(fs))

# The total does not depend on the fixed-point choices
for choice in (("z", "z"), ("uz", "uz"), ("uz", "z")):
    print(choice, k_minus_l(FusionSystem(p, "aa", *choice)))

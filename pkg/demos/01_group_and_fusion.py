"""
The group D_{2^n} x C_{2^m} and its four fusion patterns
=========================================================

Walks through the group arithmetic, the two Klein-four-by-cyclic subgroups
that can carry extra fusion, and what that fusion does to element classes.
"""

from dihedral_blocks.automorphisms import order3_automorphism, q_subgroup
from dihedral_blocks.fusion import (
    FusionSystem,
    element_fusion_classes,
    essential_candidates,
    subsection_representatives,
)
from dihedral_blocks.group import Params, center, conjugacy_classes, derived_subgroup, named

p = Params(4, 1)
g = named(p)
print(f"|D| = {p.order}, x = {g['x']}, y = {g['y']}, z = {g['z']}, u = {g['u']}")

# Centre and commutator subgroup, computed by brute force
print("Z(D) =", [str(e) for e in center(p).elements])
print("|D:D'| =", p.order // derived_subgroup(p).order)
print("conjugacy classes:", len(conjugacy_classes(p)))

###############################################################################
# Only two classes of subgroups survive the essential-candidate filters.

fs = FusionSystem(p, "aa")
kept, report = essential_candidates(fs)
for r in report:
    print(f"  {r.subgroup!s:40} {r.iso:16} {r.verdict}")
print("candidates:", [str(c[0]) for c in kept])

###############################################################################
# The order-3 automorphism of Q1 cycles u -> y -> uy and fixes <z>.

alpha = order3_automorphism(1, "z", p)
print(alpha, "fixes", [str(e) for e in alpha.fixed_points().elements])

###############################################################################
# Fusion merges classes of reflections into the central involution classes.

for case in ("bb", "ab", "aa"):
    fs = FusionSystem(p, case)
    reps = subsection_representatives(fs)
    print(f"{case}: {len(element_fusion_classes(fs))} classes, reps {[str(r) for r in reps]}")

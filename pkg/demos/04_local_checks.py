"""
Weights, alternating sums and gluing
====================================

Local data for the same blocks: weight counts against l(B), the
chain-by-chain ordinary weight sums, and the chain classes of centric
subgroups whose automizers decide the gluing problem.
"""

from dihedral_blocks.automorphisms import q_subgroup
from dihedral_blocks.conjectures import (
    alperin_weight_count,
    gluing_check,
    owc_check,
    owc_terms,
)
from dihedral_blocks.fusion import FusionSystem
from dihedral_blocks.group import Params
from dihedral_blocks.invariants import block_invariants

p = Params(4, 1)
for case in ("aa", "ab", "bb"):
    fs = FusionSystem(p, case)
    print(case, "weights:", alperin_weight_count(fs), "l:", block_invariants(fs).l)

###############################################################################
# On Q1 the two chains of 2-subgroups of S3 cancel exactly.

fs = FusionSystem(p, "aa")
for t in owc_terms(fs, q_subgroup(1, p), p.m + 2):
    print(f"  chain {t.chain}: sign {t.sign:+d}, orbits {t.orbits}, contribution {t.contribution:+d}")
print(owc_check(fs))

###############################################################################
# Every chain class falls into one of three kinds, all with vanishing cohomology.

report = gluing_check(fs)
print(report.verdict)
for c in report.classes[:10]:
    print(f"  top {c.top!s:36} length {c.length} kind {c.kind} automizer {c.automizer}")
print(f"  ... {len(report.classes)} classes in total")

"""
Complement groups from braid monodromy
======================================

Each braid in a monodromy factorization identifies every loop with its
image; the resulting presentation describes the fundamental group of a plane
curve complement.  We compare such groups through cheap exact invariants.
"""

from monodromy import BraidWord
from monodromy.factorization import CuspidalFactorization, regenerate
from monodromy.freegroup import surface_presentation
from monodromy.vankampen import MonodromyInput, abelianization, count_homs, fingerprint, presentation, tietze_simplify

s1 = BraidWord.generator(2, 1)
conic = presentation(MonodromyInput(2, (s1, s1), projective=True))
print(conic.format())
print("abelianization:", abelianization(conic), "| homs into S3:", count_homs(conic, 3))
print("simplified:\n" + tietze_simplify(conic).format())

# A cusp factor s1^3 next to a node factor conjugated by s2.  Regeneration
# replaces each by that many half twists, and the group collapses.
ident = BraidWord(3)
cusp = CuspidalFactorization(3, ((ident, 3), (BraidWord.parse("s2", 3), 2)))
for label, m in (
    ("cuspidal", MonodromyInput.from_cuspidal(cusp)),
    ("regenerated", MonodromyInput(3, regenerate(cusp).factors)),
):
    fp = fingerprint(presentation(m), ks=(2, 3, 4))
    print(f"{label:12s}", fp.to_dict())

for g in (1, 2):
    print(f"surface of genus {g}: abelianization {abelianization(surface_presentation(g))}")

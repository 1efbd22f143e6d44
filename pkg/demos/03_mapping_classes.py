"""
The hyperelliptic mapping class group in homology
=================================================

Dehn twists along a chain of 2g+1 curves generate the hyperelliptic mapping
class group.  On first homology each twist is a transvection, so words in the
twists become integer symplectic matrices that we can test relations on.
"""

import numpy as np

from monodromy.mcg import (
    ChainCurves,
    MCGWord,
    coxeter_element,
    hyperelliptic_relator,
    is_symplectic,
    symplectic_rep,
    verify_presentation_relators,
)

g = 2
chain = ChainCurves.standard(g)
print("chain classes:", chain.classes)
print("intersection pattern:\n", np.asarray(chain.gram()))

# The palindrome x1 ... x5 x5 ... x1 is the hyperelliptic involution, which
# acts as minus the identity.
pal = hyperelliptic_relator(g)
print(pal.format(), "->\n", symplectic_rep(pal))

M = symplectic_rep(MCGWord.parse("x1 x3^-1 x4 x2", g))
print("random word is symplectic:", is_symplectic(M, g))

# A Coxeter element of a chain, and its image in homology.
w = coxeter_element([1, 2, 3], g)
print("Coxeter element:", w.format())
print(symplectic_rep(w))

for genus in (1, 2, 3):
    report = verify_presentation_relators(genus)
    print(f"genus {genus}: {len(report.checks)} relator checks, all hold: {report.ok}")

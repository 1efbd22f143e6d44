"""
Hurwitz orbits of factorizations
================================

The braid group acts on ordered factorizations by sliding one factor past
its neighbour.  This script enumerates a few orbits in symmetric groups,
then asks the three-valued equivalence search to compare two tuples.
"""

from collections import Counter

from monodromy import Factorization, SymmetricGroup
from monodromy.search import hurwitz_equivalent, orbit_enumerate, replay

S4 = SymmetricGroup(4)


def fact(*cycles):
    return Factorization(S4, [S4.parse(c) for c in cycles])


f = fact("(1 2)", "(2 3)", "(3 4)", "(3 4)")
orbit = orbit_enumerate(f, budget=10_000)
print(f"orbit of {f.format()}: {len(orbit)} tuples, exhausted={orbit.exhausted}")
# every member multiplies out to the same permutation
print("products:", Counter(S4.format(m.product) for m in orbit.members))

# A tuple and a Hurwitz-scrambled copy of it are recognised as equivalent,
# and the certificate is a list of moves that can be replayed.
g = orbit.members[-1]
verdict = hurwitz_equivalent(f, g)
print("verdict:", verdict.status, "after", len(verdict.certificate), "moves")
assert replay(f, verdict.certificate).key == g.key

# Tuples with different products can never be equivalent.
h = fact("(1 2)", "(1 2)", "(3 4)", "(3 4)")
verdict = hurwitz_equivalent(f, h)
print("verdict:", verdict.status, "witness:", verdict.witness.invariant)

# Allowing simultaneous conjugation merges orbits that only differ by a relabelling.
a, b = fact("(1 2)", "(1 2)"), fact("(1 3)", "(1 3)")
print("without conjugation:", hurwitz_equivalent(a, b).status)
print("with conjugation:   ", hurwitz_equivalent(a, b, conjugation=True).status)

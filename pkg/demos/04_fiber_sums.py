"""
Lefschetz fibrations and fiber sums
===================================

A fibration over a disk is recorded by its vanishing cycles, each a Dehn
twist conjugated into place, plus the boundary monodromy.  Fiber sums glue
two such records along a mapping class.
"""

from monodromy.factorization import hurwitz_move
from monodromy.lefschetz import LefschetzFibration, fiber_sum, kas_equivalent, product_image, twist_about, validate
from monodromy.mcg import MCGWord, hyperelliptic_relator

g = 2
# The ten twists of the palindrome relator multiply to the involution H.
factors = tuple(twist_about(g, i) for i, _ in hyperelliptic_relator(g).letters)
f = LefschetzFibration(g, "disk", factors, MCGWord.involution(g))
print("checks:", dict(validate(f).checks))

psi = MCGWord.parse("x2 x4^-1", g)
s = fiber_sum(f, f, psi)
print(f"fiber sum has {len(s.factors)} singular fibres, boundary {s.phi.format()}")
print("valid:", validate(s).ok)
print("monodromy around the boundary in homology:\n", product_image(s))

# Sliding one vanishing cycle past another; different curve patterns are told apart.
a = LefschetzFibration(g, "disk", (twist_about(g, 1), twist_about(g, 2)))
slid = hurwitz_move(a.as_factorization(), 1)
print("slid factorization:", slid.format())
b = LefschetzFibration(g, "disk", (twist_about(g, 1), twist_about(g, 3)))
print("c1,c2 vs c1,c3:", kas_equivalent(a, b, budget=200).status)

"""
Braids acting on a free group
=============================

A braid on n strands is identified with the automorphism it induces on the
free group F_n.  Two braid words are equal exactly when those automorphisms
agree, which gives a complete and fast solution of the word problem.
"""

import random

from monodromy import BraidWord, artin_action, braid_equals, full_twist, permutation
from monodromy.braid import product_word

# The half twist s1 swaps the first two loops and conjugates one of them.
s1 = BraidWord.parse("s1", 3)
print("s1 acts as:", [img.format() for img in artin_action(s1).images])

# The braid relation holds; a commutation between adjacent twists does not.
lhs = BraidWord.parse("s1 s2 s1", 3)
rhs = BraidWord.parse("s2 s1 s2", 3)
print("s1 s2 s1 == s2 s1 s2:", braid_equals(lhs, rhs))
print("s1 s2 == s2 s1:", braid_equals(BraidWord.parse("s1 s2", 3), BraidWord.parse("s2 s1", 3)))

# The full twist is central: it commutes with every generator.
delta2 = full_twist(4)
for i in (1, 2, 3):
    s = BraidWord.generator(4, i)
    assert braid_equals(delta2 * s, s * delta2)
print("full twist on 4 strands:", delta2.format(), "| permutation", permutation(delta2))

# The product g1 g2 ... gn is fixed by every braid: the loop around all
# punctures does not care how they are shuffled inside.
rng = random.Random(0)
for _ in range(5):
    b = BraidWord(5, [(rng.randrange(1, 5), rng.choice((1, -1))) for _ in range(8)])
    image = artin_action(b)(product_word(5))
    print(f"{b.format():40s} -> {image.format()}")

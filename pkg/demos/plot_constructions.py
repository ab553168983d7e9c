"""
Building bricks from pairs of triples
=====================================

Each constructor takes primitive Pythagorean triples (odd leg first) and
returns a brick, or None when its hypothesis fails.
"""

from brickforge import corollary1, corollary2, lift_pair, sounderson, theorem1, theorem2, theorem3

###############################################################################
# The classical one-triple family
t0 = (3, 4, 5)
print(sounderson(t0))

# The same brick comes out of theorem3 fed with the lifted pair
t1, t2 = lift_pair(t0)
print(t1, t2, theorem3((3, 4), t1, t2))

###############################################################################
# Leg-pair constructions need a product condition and one square
print(theorem1((7, 20), (7, 24, 25), (99, 20, 101)))
print(theorem2((11, 17), (11, 60, 61), (17, 144, 145)))

###############################################################################
# The corollaries only need the square
print(corollary1((7, 24, 25), (99, 20, 101)))
print(corollary2((11, 60, 61), (17, 144, 145)))
print(corollary1((3, 4, 5), (5, 12, 13)))  # 2529 is not a square

"""
Checking and taking apart an Euler brick
========================================

An Euler brick has integer edges and integer face diagonals. Here we
verify a few candidates and split one into its three face triples.
"""

from brickforge import brick_from_edges, decompose, derived_brick, normalize, verify_brick

###############################################################################
# The smallest Euler brick
rep = verify_brick(117, 44, 240)
print(rep)

# One digit off and it is no longer a brick
print(verify_brick(177, 44, 240).is_euler)

###############################################################################
# Every face is a scaled primitive triple. The scale factors are the
# pairwise gcds of the edges.
br = brick_from_edges(117, 44, 240)
dec = decompose(br)
print(dec.k1, dec.k2, dec.k3)
print(dec.t1, dec.t2, dec.t3)

###############################################################################
# Any brick gives another one with edges (bc, ac, ab).
d = derived_brick(br)
print(d.edges, normalize(d).edges)

"""
Bounded scans over primitive triples
====================================

Scans walk every pair of primitive triples with hypotenuse up to a bound.
Constructive scans collect bricks; the two conjecture scans look for
counterexamples and find none at these bounds.
"""

from brickforge.search import scan_conjecture1, scan_conjecture2, scan_corollary, scan_problem, scan_theorem

###############################################################################
# Corollary scans, deduplicated by normalized edges
rep = scan_corollary("cor1", 1000)
print(rep.triples, "triples,", len(rep.hits), "bricks")
for h in rep.hits[:5]:
    print(h.t1, h.t2, h.brick.edges)

###############################################################################
# Theorem scans add a leg pair (u0, v0)
rep = scan_theorem("th3", 300, 20)
for h in rep.hits[:5]:
    print(h.leg_pair, h.brick.edges)

###############################################################################
# Problem scans keep every tuple meeting the square condition and record
# whether the product condition also holds
rep = scan_problem("problem3", 89, 4)
print(len(rep.hits), "square-condition tuples,", len(rep.violations), "without the product condition")

###############################################################################
# Conjecture scans
print(scan_conjecture1(1000).hits)
print(scan_conjecture2(500).hits)

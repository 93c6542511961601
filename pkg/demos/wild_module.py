"""
A module without torsion
========================

Two generators and two relations over Z[s^±, t^±] reduce to one relation
in s.  After inverting 1 - t the action of s is a 2x2 matrix with unit
determinant, so the module is free of rank two over that ring.
"""

from bingsling import knotmodule as km
from bingsling.laurent import LaurentPoly

pres = km.presentation_reduce_wild()
print("\n".join(pres.log))

act = km.wild_module_companion()
print(act.det(), act.det().is_unit(), km.companion_identity_check(act))
print([km.s_power_two_ways(k) for k in range(-3, 4)])

# compare with an honest knot module
t = LaurentPoly.gen("t")
trefoil = km.cyclic_presentation(t * t - t + 1)
print(km.torsion_decide(trefoil), km.one_minus_t_invertible(trefoil))
print(km.torsion_decide(km.free_presentation(1)))

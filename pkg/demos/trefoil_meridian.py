"""
Meridians of the trefoil group in Z/3 * Z/2
===========================================

A conjugate of a meridian has cyclically reduced length 2 in the free
product.  The word x^2 y^-1 has length 6, so it is not one.
"""

from bingsling import groups as g

print(g.trefoil_word_translate("x"), "|", g.trefoil_word_translate("y"))
print(len(g.trefoil_word_translate("x y x (y x y)^-1")))  # the relation

rep = g.trefoil_meridian_check("x^2 y^-1")
print(rep.image, rep.describe())

p, pxy = g.trefoil_meridians()
print(p, pxy)

"""
The (u, v, w) ring and Cochran-type series
==========================================
"""

from bingsling import conway, walgebra
from bingsling.walgebra import WElement

w = WElement.w()
print("w^2 =", w * w)

# the first cover, rewritten in u, v, w and back
L = conway.MAZUR
e = walgebra.omega_to_w(L.potential, L.lk)
print(e, walgebra.w_to_omega(e) == L.potential)

# divide by the component polynomials and read off the u-linear part
swapped = conway.swap_components(conway.mazur_cover(3))
R = walgebra.reduced_potential(swapped, 12)
C = walgebra.cochran_series(R)
print("P_1 for r=3:", C)

# splicing two such links adds their series
L2 = conway.swap_components(conway.mazur_cover(2))
C2 = walgebra.cochran_series(walgebra.reduced_potential(L2, 12))
both = walgebra.cochran_series(walgebra.reduced_potential(conway.splice(L2, swapped), 12))
print(walgebra.cochran_splice_add(C2, C) == both)

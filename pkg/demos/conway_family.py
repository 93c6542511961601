"""
Conway polynomials of a family of cyclic covers
===============================================

The knots J_r come from a three-term recursion.  We compare that with an
independent product over r-th roots of unity, computed exactly by resultants.
"""

from bingsling import conway

for r in range(1, 7):
    print(r, conway.nabla_J(r), "|", conway.nabla_J_oracle(r) == conway.nabla_J(r))

# the two-component links M_r add a Lucas-polynomial tail
print(conway.nabla_M(2))

# potentials in two variables; the first variable belongs to J_r
om = conway.omega_Mr(3)
print(om)
print("at (1,1):", om.evaluate({"x": 1, "y": 1}))
print("oracle agrees:", om == conway.omega_Mr_oracle(3))

# splicing multiplies potentials after the linking-number substitution
spliced = conway.splice(conway.mazur_cover(1), conway.swap_components(conway.mazur_cover(2)))
print(spliced.potential.evaluate({"x": 1, "y": 1}), spliced.violations())

# the generating function in t reproduces the whole family at once
g = conway.nabla_J_generating_series(8)
print(all(g[n] == conway.nabla_J(n) for n in range(1, 9)))

"""
Conjugacy in a twisted product of the Heisenberg group with Z
=============================================================
"""

from bingsling import groups as g

print(g.Y * g.X)
print(g.heis_phi(g.X), g.heis_phi(g.Y))

# conjugating t by x^l y^m [y,x]^n only depends on (l, m)
print(g.conj_t_closed_form(1, 0), g.g_conj(g.T, g.g_of(g.X)))

verdict = g.conj_t_vs_txy(bound=4)
print(verdict.describe())

print(g.abelianization_check())

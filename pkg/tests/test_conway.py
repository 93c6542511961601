import pytest
from hypothesis import given, strategies as st

from bingsling import conway as c
from bingsling.conway import XY, fibonacci, lucas, nabla_J, nabla_J_closed_form, nabla_J_oracle, nabla_M, omega_Mr, omega_Mr_oracle
from bingsling.errors import ResourceError, UsageError
from bingsling.laurent import LaurentPoly, substitute_u

z = LaurentPoly.gen("z")
x = LaurentPoly.gen("x", XY)
y = LaurentPoly.gen("y", XY)
u = x - x ** -1
v = y - y ** -1
OMEGA_M = 1 + (x * y + x ** -1 * y ** -1) * u * v


def test_fibonacci_lucas_values():
    assert fibonacci(0) == 0 and fibonacci(1) == 1
    assert lucas(0) == 2 and lucas(1) == z
    assert fibonacci(4) == z ** 3 + 2 * z
    assert lucas(3) == z ** 3 + 3 * z
    assert fibonacci(-3) == z ** 2 + 1


@given(st.integers(-15, 15))
def test_fibonacci_lucas_as_powers(n):
    X = LaurentPoly.gen("x")
    assert substitute_u(fibonacci(n)) * (X + X ** -1) == X ** n - (1 if n % 2 == 0 else -1) * X ** -n
    assert substitute_u(lucas(n)) == X ** n + (1 if n % 2 == 0 else -1) * X ** -n


def test_nabla_J_small():
    assert nabla_J(1) == 1
    assert nabla_J(2) == 1 - 2 * z ** 2
    assert nabla_J(3) == 1 + 3 * z ** 4
    # frozen from the recursion, cross-checked against both product oracles
    assert nabla_J(4) == 1 - 2 * z ** 4 - 4 * z ** 6
    assert nabla_J(5) == 1 + 5 * z ** 6 + 5 * z ** 8


@pytest.mark.parametrize("r", range(1, 13))
def test_nabla_J_against_oracles(r):
    assert nabla_J(r) == nabla_J_oracle(r) == nabla_J_oracle(r, direct=True)


@pytest.mark.parametrize("r", range(1, 16))
def test_closed_form_and_recursion_agree(r):
    assert nabla_J_closed_form(r) == nabla_J(r)


def test_nabla_M_values():
    assert nabla_M(1) == z + 2 * z ** 3 + z ** 5
    assert nabla_M(2) == z - 2 * z ** 3 - 3 * z ** 5 - z ** 7
    assert c.conway_polynomial(c.MAZUR) == nabla_M(1)


@pytest.mark.parametrize("r", range(1, 9))
def test_omega_against_oracle(r):
    assert omega_Mr(r) == omega_Mr_oracle(r)


def test_omega_first_cover_is_mazur():
    assert omega_Mr(1) == OMEGA_M
    assert omega_Mr_oracle(1) == OMEGA_M


@pytest.mark.parametrize("r", range(1, 11))
def test_torres_and_lk(r):
    assert omega_Mr(r).evaluate({"x": 1, "y": 1}) == 1
    assert omega_Mr(r).evaluate({"y": 1}) == substitute_u(nabla_J(r), "x", ("x",))


def test_generating_series_prefix():
    g = c.nabla_J_generating_series(12)
    assert g[0] == 0
    assert all(g[n] == nabla_J(n) for n in range(1, 13))


def test_bad_r():
    with pytest.raises(UsageError):
        nabla_J(0)
    with pytest.raises(ResourceError):
        nabla_J(c.MAX_R + 1)


def test_conway_identity_chain():
    # skein between M and Hopf: difference is -u times the resolved link
    omega_L = -v * (x * y + x ** -1 * y ** -1)
    assert OMEGA_M - c.HOPF.potential == -u * omega_L


def test_stored_links_valid():
    for L in c.STORED_LINKS + (c.mazur_cover(4),):
        assert L.violations() == []


def test_splice_examples():
    assert c.splice_omega(c.HOPF, c.MAZUR) == c.MAZUR.potential
    assert c.splice_omega(c.MAZUR, c.MAZUR).evaluate({"x": 1, "y": 1}) == 1


def test_connected_sum_examples():
    assert c.connected_sum_omega(c.HOPF, LaurentPoly.const(1)) == 1
    assert c.connected_sum_omega(c.MAZUR, 1 + z * z) == OMEGA_M * (1 + v * v)


def test_pushoff_examples():
    assert c.pushoff_omega(c.MAZUR, 1) == OMEGA_M
    assert c.pushoff_omega(c.HOPF, 2) == u
    assert c.pushoff_omega(c.UNLINK, 3) == 0


def test_orientation_reverse():
    assert c.orientation_reverse_omega(c.HOPF) == -1
    rev = c.reverse_first(c.MAZUR)
    assert rev.potential == -OMEGA_M.monomial_subs({"x": (-1, 0)})
    assert rev.potential.evaluate({"x": 1, "y": 1}) == -1
    assert c.reverse_first(rev).potential == OMEGA_M


def test_annulus():
    assert c.annulus_omega(c.HOPF) == -u
    assert c.annulus_omega(c.UNLINK) == 0


def test_link_homotopy_delta():
    V = LaurentPoly.gen("v")
    assert c.link_homotopy_delta(0).value == 0
    assert c.link_homotopy_delta(2).value == -V
    assert c.link_homotopy_delta(-2).value == -V ** 3 - 3 * V
    assert c.link_homotopy_delta(4).value == -V ** 5 - 5 * V ** 3 - 6 * V
    with pytest.raises(UsageError):
        c.link_homotopy_delta(3)


@pytest.mark.parametrize("n", [2, -2, 4, 6])
def test_link_homotopy_delta_is_odd(n):
    # the difference comes out odd in v for every even n != 0
    assert not c.link_homotopy_delta(n).even_in_v


@pytest.mark.parametrize("n", [0, 1, 5, 12])
def test_lucas_even_identity(n):
    assert c.lucas_even_identity(n)


def test_congruence_check():
    T = "T"
    g = {0: LaurentPoly.const(1), 1: z * z, 2: -z * z}
    assert c.congruence_check(g, 2, 2, 1, 1)
    assert c.congruence_check(g, 4, 2, 2, 1)
    assert c.congruence_check({0: 5}, 6, 3, 1, 2)
    with pytest.raises(UsageError):
        c.congruence_check(g, 4, 4, 1, 1, T)


def test_swap_is_involution():
    L = c.mazur_cover(3)
    assert c.swap_components(c.swap_components(L)).potential == L.potential

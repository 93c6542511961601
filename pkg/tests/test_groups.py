from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bingsling import groups as g
from bingsling.groups import GElement, HeisElement, T, X, Y, Z

ints = st.integers(-20, 20)
heis = st.builds(HeisElement, ints, ints, ints)
gel = st.builds(GElement, st.integers(-5, 5), heis)


def test_heis_examples():
    assert g.heis_mul(Y, X) == HeisElement(1, 1, 1)
    assert g.heis_inv(HeisElement(1, 1, 1)) == HeisElement(-1, -1, 0)
    a = HeisElement(3, -2, 7)
    assert a * a.inverse() == HeisElement()


def test_phi_examples():
    assert g.heis_phi(X) == HeisElement(0, -1, 0)
    assert g.heis_phi(Y) == HeisElement(1, 1, 1)
    assert g.heis_phi(Z) == Z


def test_conjugate_t_by_x():
    assert g.g_conj(T, g.g_of(X)) == GElement(1, HeisElement(1, 1, 1))


@given(heis, heis, heis)
@settings(max_examples=1000)
def test_heisenberg_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == HeisElement() == a.inverse() * a


@given(heis, heis)
@settings(max_examples=300)
def test_phi_is_automorphism(a, b):
    assert g.heis_phi(a * b) == g.heis_phi(a) * g.heis_phi(b)
    assert g.heis_phi_inv(g.heis_phi(a)) == a == g.heis_phi(g.heis_phi_inv(a))


@given(heis, st.integers(-6, 6), st.integers(-6, 6))
def test_phi_power(a, j, k):
    assert g.heis_phi_power(g.heis_phi_power(a, j), k) == g.heis_phi_power(a, j + k)


@given(gel, gel, gel)
@settings(max_examples=1000)
def test_twisted_product_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == GElement(0, HeisElement())


def test_closed_form_on_box():
    box = range(-3, 4)
    for k, l, m, n in product(box, box, box, box):
        assert g.g_conj(T, GElement(k, HeisElement(l, m, n))) == g.conj_t_closed_form(l, m)


@pytest.mark.parametrize("bound", [3, 6])
def test_t_and_txy(bound):
    v = g.conj_t_vs_txy(bound)
    assert not v.conjugate and not v.system_consistent and v.witness is None


def test_abelianization():
    rep = g.abelianization_check()
    assert rep.matrix == ((0, 1), (-1, 1))
    assert rep.minus_identity == ((-1, 1), (-1, 0))
    assert rep.det_minus_identity == 1 and rep.order == 6 and rep.ok


def test_free_product_reduction():
    assert len(g.freeprod_reduce([("p", 3)])) == 0
    assert len(g.freeprod_cyclic_reduce(g.trefoil_word_translate("x^2 y^-1"))) == 6
    assert len(g.freeprod_cyclic_reduce(g.trefoil_word_translate("x"))) == 2


def test_trefoil_translation():
    assert g.trefoil_word_translate("x") == g.freeprod_reduce([("p", -1), ("q", 1)])
    assert g.trefoil_word_translate("y") == g.freeprod_reduce([("q", -1), ("p", 2)])
    assert len(g.trefoil_word_translate("x y x (y x y)^-1")) == 0


def test_conjugacy_tests():
    a = g.trefoil_word_translate("x^2 y^-1")
    assert not g.freeprod_conjugate_test(a, g.trefoil_word_translate("x"))
    w = g.freeprod_reduce([("p", 1), ("q", 1), ("p", 2), ("q", 1)])
    rot = g.freeprod_reduce([("p", 2), ("q", 1), ("p", 1), ("q", 1)])
    assert g.freeprod_conjugate_test(w, rot)
    assert not g.freeprod_conjugate_test(g.freeprod_reduce([("p", 1)]), g.freeprod_reduce([("p", 2)]))


def test_meridian_report():
    rep = g.trefoil_meridian_check()
    assert (rep.alternations, rep.meridian_alternations, rep.conjugate) == (6, 2, False)
    assert rep.describe() == "alternation 6 vs 2 => not conjugate"


def test_trefoil_meridians_in_twisted_product():
    m1, m2 = g.trefoil_meridians()
    assert m1 == T
    assert m2 == T * g.g_of(X * Y)


def test_parse_word():
    w = g.parse_word("[x, y] t^-2")
    assert g.word_to_g(w) == g.word_to_g(g.parse_word("x y x^-1 y^-1 t^-1 t^-1"))

import pytest
from hypothesis import given, settings, strategies as st

from bingsling.cyclotomic import resultant, roots_of_unity_product, roots_of_unity_product_direct
from bingsling.errors import DomainError
from bingsling.laurent import LaurentPoly

z = LaurentPoly.gen("z")


def test_product_of_roots_of_unity():
    assert roots_of_unity_product({1: 1}, 3) == 1
    assert roots_of_unity_product({1: 1}, 4) == -1


def test_family_factor_r3():
    g = {0: LaurentPoly.const(1), 1: z * z, 2: -z * z}
    assert roots_of_unity_product(g, 3) == 1 + 3 * z ** 4


def test_constant_factor():
    assert roots_of_unity_product({0: 3}, 5) == 243


def test_resultant_examples():
    c = LaurentPoly.gen("c")
    assert resultant({0: -1, 2: 1}, {0: -c, 1: 1}) == c * c - 1
    assert resultant({0: -1, 3: 1}, {0: -1, 1: 1}) == 0
    assert resultant({0: 1, 1: 1, 2: 1}, {0: z, 1: -1}) == z * z + z + 1


def test_resultant_zero_input():
    with pytest.raises(DomainError):
        resultant({}, {0: 1, 1: 1})


@given(st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), min_size=1, max_size=4), st.integers(1, 7))
@settings(max_examples=120)
def test_resultant_matches_ramanujan_projection(g, r):
    g = {k: c for k, c in g.items() if c}
    if not g:
        return
    assert roots_of_unity_product(g, r) == roots_of_unity_product_direct(g, r)

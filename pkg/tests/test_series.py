import pytest
from hypothesis import given, strategies as st

from bingsling import series_inverse
from bingsling.errors import DomainError
from bingsling.laurent import LaurentPoly
from bingsling.series import RationalSeries, TruncatedSeries

z = LaurentPoly.gen("z")


def test_inverse_example():
    s = TruncatedSeries.from_poly(1 - 2 * z ** 2, 8)
    assert series_inverse(s).coeffs == (1, 0, 2, 0, 4, 0, 8, 0, 16)


def test_inverse_of_one():
    assert series_inverse(TruncatedSeries.one(11)) == TruncatedSeries.one(11)


def test_inverse_non_unit():
    with pytest.raises(DomainError):
        series_inverse(TruncatedSeries.from_poly(2 + z, 5))


def test_orders_combine_to_minimum():
    a = TruncatedSeries([1, 1, 1], 5)
    b = TruncatedSeries([1, 2], 3)
    assert (a * b).order == 3
    assert (a + b).order == 3


def test_json_roundtrip():
    s = TruncatedSeries([1, -3, 0, 7], 6)
    assert TruncatedSeries.from_json(s.to_json()) == s


def test_rational_series_normalization():
    r = RationalSeries(2 * (1 - z), (1 - z) * (z - 1) * -1)
    assert r.Q.constant_term() == 1
    assert r == RationalSeries(LaurentPoly.const(2), 1 - z)
    assert r.series(5).coeffs == (2,) * 6


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=10), st.sampled_from([1, -1]))
def test_inverse_property(tail, c0):
    s = TruncatedSeries([c0] + tail, len(tail))
    assert s * s.inverse() == TruncatedSeries.one(s.order)

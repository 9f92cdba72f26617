from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leftalg.errors import DuplicateAlpha
from leftalg.orepoly import OrePoly, central_interpolants, left_eval, linear, ore_mul, right_eval
from leftalg.scalars import shift, x
from leftalg.series import T

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)
qpolys = st.lists(rationals, min_size=1, max_size=4).map(OrePoly)


def sigma(c):
    return shift(c, 1)


def test_twisted_product():
    # t * x0 = x1 * t
    tpoly = OrePoly([0, 1], sigma)
    cpoly = OrePoly([x(0)], sigma)
    assert ore_mul(tpoly, cpoly) == OrePoly([0, x(1)], sigma)


def test_printing():
    assert str(OrePoly([1, 2, 3])) == "1 + 2*t + 3*t^2"
    assert str(OrePoly([x(0), 1], var="X")) == "x0 + X"


def test_right_and_left_evaluation_differ():
    p = OrePoly([0, x(0)], var="X")
    assert right_eval(p, T) == x(0) * T
    assert left_eval(p, T) == T * x(0)
    assert right_eval(p, T) != left_eval(p, T)


def test_linear_roots():
    assert right_eval(linear(Fraction(3)), Fraction(3)) == 0


def test_central_interpolants():
    f, fs = central_interpolants([0, 1, 2])
    assert f == OrePoly([0, 2, -3, 1])
    for i, fi in enumerate(fs):
        assert ore_mul(fi, linear(Fraction(i))) == f
    with pytest.raises(DuplicateAlpha):
        central_interpolants([1, 1])


@settings(max_examples=50, deadline=None)
@given(qpolys, qpolys, qpolys)
def test_commutative_case_is_a_ring(f, g, h):
    assert ore_mul(ore_mul(f, g), h) == ore_mul(f, ore_mul(g, h))
    assert ore_mul(f, g + h) == ore_mul(f, g) + ore_mul(f, h)
    assert ore_mul(f, g) == ore_mul(g, f)


@settings(max_examples=50, deadline=None)
@given(qpolys, qpolys, rationals)
def test_evaluation_is_multiplicative_over_center(f, g, a):
    assert right_eval(ore_mul(f, g), a) == right_eval(f, a) * right_eval(g, a)

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leftalg.errors import ParseError, ZeroNorm
from leftalg.orepoly import right_eval
from leftalg.quaternion import QAlgebra, commutator, find_isotropic, quat_minpoly_center, sample_derived

H = QAlgebra.division(-1, -1)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=5)
quats = st.builds(H, rationals, rationals, rationals, rationals)
algebras = st.sampled_from([QAlgebra.division(-1, -1), QAlgebra.division(-1, -3), QAlgebra.division(-2, -5)])


def test_relations():
    i, j, k = H.i, H.j, H.k
    assert i * i == -1 and j * j == -1
    assert i * j == k and j * i == -k
    alg = QAlgebra.division(-2, -5)
    assert alg.i * alg.i == -2 and alg.j * alg.j == -5
    assert alg.i * alg.j == -(alg.j * alg.i)


def test_norm_and_trace():
    q = H(1, 2, 3, 4)
    assert q.norm() == 30
    assert q.trace() == 2
    assert q * q.conj() == H(30)


def test_zero_norm_inverse():
    with pytest.raises(ZeroNorm):
        H.zero.inv()


def test_parse_and_print():
    q = H.parse("1 + 2i - 3j + 1/2*k")
    assert q == H(1, 2, -3, Fraction(1, 2))
    assert str(q) == "1 + 2i - 3j + 1/2*k"
    assert H.parse(str(q)) == q
    with pytest.raises(ParseError):
        H.parse("1 + 2q")


def test_split_algebra_is_refused():
    assert find_isotropic(1, -1) is not None
    with pytest.raises(ValueError):
        QAlgebra.division(1, 1)


def test_central_minpoly():
    assert quat_minpoly_center(H(3)).degree == 1
    p = quat_minpoly_center(H(1, 1, 1, 0))
    assert p.coeffs == (3, -2, 1)


@settings(max_examples=80, deadline=None)
@given(algebras, st.data())
def test_norm_is_multiplicative(alg, data):
    p = alg(*data.draw(st.tuples(rationals, rationals, rationals, rationals)))
    q = alg(*data.draw(st.tuples(rationals, rationals, rationals, rationals)))
    assert (p * q).norm() == p.norm() * q.norm()
    assert (p * q).conj() == q.conj() * p.conj()


@settings(max_examples=80, deadline=None)
@given(quats, quats, quats)
def test_associativity_and_distributivity(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=80, deadline=None)
@given(quats)
def test_root_of_central_minpoly(q):
    assert right_eval(quat_minpoly_center(q), q).is_zero()
    if not q.is_zero():
        assert q * q.inv() == H.one


def test_commutators_have_norm_one():
    for q in sample_derived(H, 2, 20, seed=3):
        assert q.norm() == 1
    u, v = H(1, 1, 0, 0), H(0, 1, 1, 0)
    assert commutator(u, v).norm() == 1

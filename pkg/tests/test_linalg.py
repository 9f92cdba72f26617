from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from leftalg.linalg import FieldOps, bareiss_rank, first_dependency, left_kernel, rank, rational_nullspace

entries = st.integers(-4, 4).map(Fraction)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_first_dependency():
    vecs = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)], [Fraction(2), Fraction(3)]]
    k, combo = first_dependency(vecs, FieldOps())
    assert k == 2
    assert [sum(c * v[i] for c, v in zip(combo, vecs)) for i in range(2)] == [0, 0]


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_ranks_match_sympy(m):
    expected = sympy.Matrix(m).rank()
    assert bareiss_rank(m) == expected
    assert rank(m, FieldOps()) == expected


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_kernels_are_kernels(m):
    ncols = len(m[0])
    for v in rational_nullspace(m, ncols):
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    assert len(rational_nullspace(m, ncols)) == ncols - sympy.Matrix(m).rank()
    relations, _ = left_kernel(m, FieldOps())
    for rel in relations:
        assert all(sum(c * row[j] for c, row in zip(rel, m)) == 0 for j in range(ncols))
    assert len(relations) == len(m) - sympy.Matrix(m).rank()

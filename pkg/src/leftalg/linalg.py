"""Exact elimination over fields and over the truncated series division ring.

Vectors are combined with scalars on the LEFT, so the same code handles
commutative fields and the noncommutative ring K = F((t^2, sigma)).  For
series, the pivot in each column is the entry of lowest degmin; then
every multiplier ``row[c] * pivot[c]^-1`` has nonnegative degmin after
moving the pivot's t-power, and no coefficient ever needs unshifting
beyond what the inputs force.
"""

from __future__ import annotations

from fractions import Fraction

from .series import SkewSeries, right_divide


class FieldOps:
    """Scalar operations for a commutative field with exact zero test."""

    def __init__(self, zero=Fraction(0), one=Fraction(1)):
        self.zero = zero
        self.one = one

    def is_zero(self, x) -> bool:
        if hasattr(x, "is_zero"):
            return x.is_zero()
        return x == 0

    def right_div(self, a, b):
        if hasattr(b, "inv"):
            return a * b.inv()
        return a / b

    def left_div(self, a, b):
        return self.right_div(a, b)

    def valuation(self, x) -> int:
        return 0


class SeriesOps:
    """Scalar operations on SkewSeries; zero means zero on the known window."""

    def __init__(self, precision=None):
        self.precision = precision
        self.zero = SkewSeries.zero()
        self.one = SkewSeries.one()

    def is_zero(self, x) -> bool:
        return SkewSeries.coerce(x).is_zero_on_window()

    def right_div(self, a, b):
        return right_divide(a, b, self.precision)

    def left_div(self, a, b):
        """b^-1 * a."""
        return SkewSeries.coerce(b).inv(self.precision) * a

    def valuation(self, x):
        return SkewSeries.coerce(x).valuation()


class _Row:
    __slots__ = ("vec", "combo")

    def __init__(self, vec, combo):
        self.vec = vec
        self.combo = combo


def _reduce(row: _Row, pivots: dict, ops, ncols: int):
    """Reduce ``row`` against the pivot rows; may install new pivots.

    Returns the leftover row if it became zero (a relation), else None.
    """
    for c in range(ncols):
        if ops.is_zero(row.vec[c]):
            continue
        piv = pivots.get(c)
        if piv is None:
            pivots[c] = row
            return None
        if ops.valuation(row.vec[c]) < ops.valuation(piv.vec[c]):
            pivots[c], row = row, piv
            piv = pivots[c]
        lam = ops.right_div(row.vec[c], piv.vec[c])
        row = _Row(
            [x - lam * y for x, y in zip(row.vec, piv.vec)],
            [x - lam * y for x, y in zip(row.combo, piv.combo)],
        )
    return row


def _unit_combo(n: int, k: int, ops):
    return [ops.one if i == k else ops.zero for i in range(n)]


def first_dependency(vectors, ops, total=None):
    """Find the least k such that vectors[0..k] are left dependent.

    Returns ``(k, combo)`` with sum(combo[i] * vectors[i]) = 0 and combo[k]
    nonzero, or ``None`` if every prefix is independent.  ``total`` sizes the
    combination vectors (defaults to len(vectors)).
    """
    vectors = list(vectors)
    n = total if total is not None else len(vectors)
    if not vectors:
        return None
    ncols = len(vectors[0])
    pivots: dict = {}
    for k, v in enumerate(vectors):
        left = _reduce(_Row(list(v), _unit_combo(n, k, ops)), pivots, ops, ncols)
        if left is not None:
            return k, left.combo
    return None


def left_kernel(vectors, ops):
    """Basis of {c : sum c_i v_i = 0} and the rank of the vectors."""
    vectors = list(vectors)
    n = len(vectors)
    if not n:
        return [], 0
    ncols = len(vectors[0])
    pivots: dict = {}
    relations = []
    for k, v in enumerate(vectors):
        left = _reduce(_Row(list(v), _unit_combo(n, k, ops)), pivots, ops, ncols)
        if left is not None:
            relations.append(left.combo)
    return relations, len(pivots)


def rank(vectors, ops) -> int:
    return left_kernel(vectors, ops)[1]


def bareiss_rank(matrix) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(map(int, row)) for row in matrix if any(row)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rational_nullspace(matrix, ncols: int):
    """Basis of the right nullspace {v : M v = 0} over Q."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    pivcols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivcols.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in set(pivcols)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivcols):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis

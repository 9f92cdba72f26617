"""Right multiplication on a quaternion algebra as a K-linear operator.

D = (a, b | Q) is a left vector space over K = Q(i) with basis {1, j}
by default.  For fixed x the map T(v) = v x commutes with left
K-scaling, so D becomes a module over the commutative ring K[t] via
f(t).v = f(T)(v).  This module computes the operator, its minimal
polynomial, the invariant factors of that module, a cyclic vector, and
the degree bookkeeping built on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .algebraicity import left_minpoly
from .errors import BasisNotIndependent, BoundViolated, XCentral
from .linalg import FieldOps, first_dependency, rank
from .quaternion import QAlgebra, Quat, quat_minpoly_center
from .rng import SplitMix64


class KPoly:
    """Polynomial over a commutative field, coefficients in ascending order.

    ``one`` fixes the field (a Quat unit for K = Q(i), or Fraction(1)).
    """

    __slots__ = ("coeffs", "one")
    __hash__ = None

    def __init__(self, coeffs: Sequence, one):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.one = one

    @property
    def zero_elem(self):
        return self.one - self.one

    @classmethod
    def constant(cls, c, one) -> KPoly:
        return cls([c], one)

    @classmethod
    def t(cls, one) -> KPoly:
        return cls([one - one, one], one)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero_elem

    def __eq__(self, other):
        if not isinstance(other, KPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __add__(self, other: KPoly) -> KPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return KPoly([self[i] + other[i] for i in range(n)], self.one)

    def __neg__(self) -> KPoly:
        return KPoly([-c for c in self.coeffs], self.one)

    def __sub__(self, other: KPoly) -> KPoly:
        return self + (-other)

    def __mul__(self, other) -> KPoly:
        if not isinstance(other, KPoly):
            return KPoly([c * other for c in self.coeffs], self.one)
        if self.is_zero() or other.is_zero():
            return KPoly([], self.one)
        out = [self.zero_elem] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return KPoly(out, self.one)

    def monic(self) -> KPoly:
        if self.is_zero():
            return self
        return self * _inv(self.leading())

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading() == self.one

    def divmod(self, other: KPoly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [self.zero_elem] * max(0, len(rem) - other.degree)
        lead_inv = _inv(other.leading())
        for k in range(len(rem) - 1, other.degree - 1, -1):
            c = rem[k] * lead_inv
            if _is_zero(c):
                continue
            shift = k - other.degree
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
        return KPoly(q, self.one), KPoly(rem, self.one)

    def __floordiv__(self, other: KPoly) -> KPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: KPoly) -> KPoly:
        return self.divmod(other)[1]

    def divides(self, other: KPoly) -> bool:
        return (other % self).is_zero()

    def __call__(self, x):
        """Horner evaluation at a ring element commuting with the coefficients."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return self.zero_elem if acc is None else acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            cs = str(c)
            mon = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            elif " " in cs:
                parts.append(f"({cs})*{mon}")
            else:
                parts.append(f"{cs}*{mon}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"KPoly({self})"


def _is_zero(c) -> bool:
    return c.is_zero() if hasattr(c, "is_zero") else c == 0


def _inv(c):
    return c.inv() if hasattr(c, "inv") else 1 / c


def poly_gcd(f: KPoly, g: KPoly) -> KPoly:
    """Monic gcd (zero only if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_lcm(f: KPoly, g: KPoly) -> KPoly:
    return (f * g // poly_gcd(f, g)).monic()


def coprime_split(p: KPoly, q: KPoly):
    """Coprime a | p and b | q with a*b = lcm(p, q).

    Starting from a = p and b = q/gcd(p, q), each shared factor is moved
    from a to b; a prime ends up wholly in the side where its exponent is
    larger.
    """
    a = p.monic()
    b = q // poly_gcd(p, q)
    while True:
        g = poly_gcd(a, b)
        if g.degree == 0:
            return a.monic(), b.monic()
        a = a // g
        b = b * g


# -- the operator ---------------------------------------------------------------


@dataclass
class LinearOperator:
    """Matrix of v -> v x in a left K-basis; column c holds the coordinates of basis[c] * x."""

    alg: QAlgebra
    x: Quat
    basis: tuple
    matrix: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def one(self) -> Quat:
        return self.alg.one

    @property
    def zero(self) -> Quat:
        return self.alg.zero

    def apply(self, vec):
        """Coordinates of T(v) from coordinates of v."""
        m = self.dim
        return [
            _ksum((self.matrix[r][c] * vec[c] for c in range(m)), self.zero)
            for r in range(m)
        ]

    def coords(self, q: Quat):
        return k_coords_in(q, self.basis)

    def element(self, vec) -> Quat:
        out = self.zero
        for c, b in zip(vec, self.basis):
            out = out + c * b
        return out

    def matmul(self, other: list) -> list:
        """M * other for a matrix ``other`` of the same size."""
        m = self.dim
        return [
            [
                _ksum((self.matrix[r][k] * other[k][c] for k in range(m)), self.zero)
                for c in range(m)
            ]
            for r in range(m)
        ]

    def __str__(self) -> str:
        rows = ["[" + ", ".join(str(e) for e in row) + "]" for row in self.matrix]
        return "[" + ", ".join(rows) + "]"


def _ksum(items, zero):
    acc = zero
    for it in items:
        acc = acc + it
    return acc


def _solve_q(cols, rhs):
    """Solve sum v_c * cols[c] = rhs over Q; None if inconsistent.

    Raises BasisNotIndependent if the columns have a nontrivial kernel.
    """
    n = len(cols)
    rows = [[Fraction(cols[c][r]) for c in range(n)] + [Fraction(rhs[r])] for r in range(len(rhs))]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            raise BasisNotIndependent("basis elements are left K-dependent")
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(row[n] for row in rows[r:]):
        return None
    return [rows[i][n] for i in range(n)]


def k_coords_in(q: Quat, basis) -> list:
    """Left K-coordinates of q in ``basis``, with K = Q(i)."""
    alg = q.alg
    if tuple(basis) == alg.k_basis():
        return list(q.k_coords())
    cols = []
    for b in basis:
        cols.append(b.coords())
        cols.append((alg.i * b).coords())
    sol = _solve_q(cols, q.coords())
    if sol is None:
        raise BasisNotIndependent(f"{q} is not in the K-span of the basis")
    return [alg.kelem(sol[2 * c], sol[2 * c + 1]) for c in range(len(basis))]


def build_operator(x: Quat, basis: Optional[Sequence[Quat]] = None) -> LinearOperator:
    alg = x.alg
    basis = tuple(basis) if basis is not None else alg.k_basis()
    if len(basis) != 2:
        raise BasisNotIndependent(f"a left K-basis of D has 2 elements, got {len(basis)}")
    # Coordinates of the basis itself must be the unit vectors.
    for b in basis:
        k_coords_in(b, basis)
    cols = [k_coords_in(b * x, basis) for b in basis]
    m = len(basis)
    matrix = [[cols[c][r] for c in range(m)] for r in range(m)]
    return LinearOperator(alg, x, basis, matrix)


def operator_from_matrix(alg: QAlgebra, matrix) -> LinearOperator:
    """A K-linear operator on K^2 given directly by its matrix (no defining x)."""
    return LinearOperator(alg, None, alg.k_basis(), [list(r) for r in matrix])


# -- minimal polynomial ---------------------------------------------------------


def _identity(op: LinearOperator) -> list:
    return [[op.one if r == c else op.zero for c in range(op.dim)] for r in range(op.dim)]


def _flatten(mat) -> list:
    return [e for row in mat for e in row]


def _kops(op: LinearOperator) -> FieldOps:
    return FieldOps(op.zero, op.one)


def _monic_from_combo(combo, k, one) -> KPoly:
    lead_inv = combo[k].inv()
    return KPoly([c * lead_inv for c in combo[: k + 1]], one)


def operator_minpoly(op: LinearOperator) -> KPoly:
    """Least-degree monic g with g(T) = 0, from the first dependency among I, T, T^2, ..."""
    powers = [_identity(op)]
    for _ in range(op.dim):
        powers.append(op.matmul(powers[-1]))
    k, combo = first_dependency([_flatten(p) for p in powers], _kops(op))
    return _monic_from_combo(combo, k, op.one)


def eval_at_operator(g: KPoly, op: LinearOperator) -> list:
    """Matrix of g(T)."""
    acc = [[op.zero] * op.dim for _ in range(op.dim)]
    power = _identity(op)
    for c in g.coeffs:
        acc = [[a + c * p for a, p in zip(ra, rp)] for ra, rp in zip(acc, power)]
        power = op.matmul(power)
    return acc


def eval_on_vector(g: KPoly, op: LinearOperator, vec) -> list:
    """Coordinates of g(T)(v), by Horner's rule."""
    acc = [op.zero] * op.dim
    for c in reversed(g.coeffs):
        acc = [a + c * v for a, v in zip(op.apply(acc), vec)]
    return acc


def vector_order(op: LinearOperator, vec) -> KPoly:
    """Monic generator of the annihilator {g : g(T)(v) = 0}."""
    orbit = [list(vec)]
    for _ in range(op.dim):
        orbit.append(op.apply(orbit[-1]))
    k, combo = first_dependency(orbit, _kops(op))
    return _monic_from_combo(combo, k, op.one)


# -- invariant factors ----------------------------------------------------------


@dataclass
class InvariantFactors:
    factors: List[KPoly]

    @property
    def degrees(self) -> list:
        return [f.degree for f in self.factors]

    def chain_holds(self) -> bool:
        return all(a.divides(b) for a, b in zip(self.factors, self.factors[1:]))

    def __str__(self) -> str:
        return ", ".join(str(f) for f in self.factors)


def smith_diagonal(mat: list) -> list:
    """Diagonal of the Smith normal form of a square matrix over K[t], monic, in chain order."""
    a = [list(row) for row in mat]
    n = len(a)
    diag = []
    for s in range(n):
        while True:
            entries = [(a[r][c].degree, r, c) for r in range(s, n) for c in range(s, n) if not a[r][c].is_zero()]
            if not entries:
                diag.extend(KPoly([], a[0][0].one) for _ in range(s, n))
                return diag
            _, r, c = min(entries)
            a[s], a[r] = a[r], a[s]
            for row in a:
                row[s], row[c] = row[c], row[s]
            p = a[s][s]
            clean = True
            for r in range(s + 1, n):
                q, rem = a[r][s].divmod(p)
                a[r] = [x - q * y for x, y in zip(a[r], a[s])]
                clean &= rem.is_zero()
            for c in range(s + 1, n):
                q, rem = a[s][c].divmod(p)
                for row in a:
                    row[c] = row[c] - row[s] * q
                clean &= rem.is_zero()
            if not clean:
                continue
            bad = next(
                (r for r in range(s + 1, n) for c in range(s + 1, n) if not p.divides(a[r][c])),
                None,
            )
            if bad is None:
                diag.append(p.monic())
                break
            a[s] = [x + y for x, y in zip(a[s], a[bad])]
    return diag


def invariant_factors(op: LinearOperator) -> InvariantFactors:
    """Nonconstant Smith invariants of tI - M: the invariant factors of D as a K[t]-module."""
    one, zero = op.one, op.zero
    char = [
        [
            KPoly([-op.matrix[r][c], one if r == c else zero], one)
            for c in range(op.dim)
        ]
        for r in range(op.dim)
    ]
    return InvariantFactors([f for f in smith_diagonal(char) if f.degree > 0])


# -- cyclic vectors ---------------------------------------------------------------


@dataclass
class CyclicVectorResult:
    y: list
    order: KPoly
    element: Optional[Quat] = None
    method: str = "constructive"
    rank: int = 0

    @property
    def degree(self) -> int:
        return self.order.degree


def _combine(op, v, p, w, q):
    """A vector whose order is lcm(p, q), from v of order p and w of order q."""
    a, b = coprime_split(p, q)
    v2 = eval_on_vector(p // a, op, v)
    w2 = eval_on_vector(q // b, op, w)
    return [s + u for s, u in zip(v2, w2)], (a * b).monic()


def _orbit_rank(op, vec, n) -> int:
    orbit = [list(vec)]
    for _ in range(n - 1):
        orbit.append(op.apply(orbit[-1]))
    return rank(orbit, _kops(op))


def cyclic_vector(op: LinearOperator, seed: int = 0, attempts: int = 64) -> CyclicVectorResult:
    """A vector y with ann(y) = ann(D), i.e. order(y) = minimal polynomial of T.

    The constructive path merges the local orders of the basis vectors
    through coprime splittings of their lcm.  If that ever disagrees with
    the minimal polynomial, seeded random K-combinations are tried.  Any
    returned y is verified by an exact rank computation of its orbit.
    """
    f = operator_minpoly(op)
    units = [[op.one if r == c else op.zero for r in range(op.dim)] for c in range(op.dim)]
    y, order = units[0], vector_order(op, units[0])
    for e in units[1:]:
        if order == f:
            break
        y, order = _combine(op, y, order, e, vector_order(op, e))
    method = "constructive"
    if order != f:
        rng = SplitMix64(seed)
        for _ in range(attempts):
            cand = [op.alg.kelem(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(op.dim)]
            if vector_order(op, cand) == f:
                y, order, method = cand, f, "random"
                break
        else:
            raise ArithmeticError("no cyclic vector found")
    r = _orbit_rank(op, y, f.degree)
    if r != f.degree:
        raise ArithmeticError(f"orbit of {y} has rank {r}, expected {f.degree}")
    return CyclicVectorResult(y, order, op.element(y), method, r)


def annihilator_matches(op: LinearOperator, y, divisors) -> bool:
    """ann(y) = ann(D), tested on the given monic divisors of the minimal polynomial.

    The minimal polynomial must kill y and no proper divisor may.
    """
    f = operator_minpoly(op)
    if not all(e.is_zero() for e in eval_on_vector(f, op, y)):
        return False
    for g in divisors:
        if not g.divides(f):
            raise ValueError(f"{g} does not divide {f}")
        if g.degree < f.degree and all(e.is_zero() for e in eval_on_vector(g, op, y)):
            return False
    return True


# -- the dimension pipeline -------------------------------------------------------


@dataclass
class PipelineReport:
    a: Fraction
    b: Fraction
    x: Quat
    d: int
    matrix: list
    minpoly: KPoly
    invariant_factors: InvariantFactors
    cyclic: CyclicVectorResult
    m: int
    u: Quat
    u_minpoly: object
    u_degree: Optional[int]
    center_degree: int
    dim_over_center: int
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "algebra": [str(self.a), str(self.b)],
            "x": str(self.x),
            "d": self.d,
            "operator": [[str(e) for e in row] for row in self.matrix],
            "operator_minpoly": str(self.minpoly),
            "invariant_factors": [str(f) for f in self.invariant_factors.factors],
            "cyclic_vector": str(self.cyclic.element),
            "m": self.m,
            "u": str(self.u),
            "u_minpoly": str(self.u_minpoly),
            "u_degree": self.u_degree,
            "dim_over_center": self.dim_over_center,
            "checks": dict(self.checks),
        }


def theorem33_pipeline(alg: QAlgebra, x: Quat, d: int) -> PipelineReport:
    """Degree bound for D = (a, b | Q) from the cyclic vector of T(v) = v x.

    With y cyclic of order f (degree m), sum f_k y x^k = 0 gives
    sum f_k u^k = 0 for u = y x y^-1, so u is left algebraic of degree m
    over K.  Maximality of Q(x) is checked as [Q(x):Q] * m = dim_Q D.
    """
    if x.is_central():
        raise XCentral(f"{x} is central")
    op = build_operator(x)
    f = operator_minpoly(op)
    inv = invariant_factors(op)
    cyc = cyclic_vector(op)
    m = f.degree
    y = cyc.element
    u = y * x * y.inv()
    mp = left_minpoly(u, "K", m + 1)
    u_degree = mp.degree if mp.algebraic else None
    dim = 4
    center_degree = quat_minpoly_center(x).degree
    checks = {
        "chain": inv.chain_holds(),
        "degree_sum": sum(inv.degrees) == op.dim,
        "last_factor_is_minpoly": bool(inv.factors) and inv.factors[-1] == f,
        "cyclic_rank": cyc.rank == m,
        "u_degree": u_degree == m,
        "dim_is_m_squared": dim == m * m,
        "maximal_subfield": center_degree * m == dim,
    }
    if m > d:
        raise BoundViolated(m, d)
    checks["bound"] = m * m <= d * d
    return PipelineReport(
        alg.a, alg.b, x, d, op.matrix, f, inv, cyc, m, u, mp.poly, u_degree,
        center_degree, dim, checks,
    )

"""Left/right algebraicity by exact linear algebra on coordinate vectors.

Coordinatizers turn ring elements into finite coordinate vectors over a
scalar ring, left-linearly:

* ``"K"`` on series: K = F((t^2, sigma)) with left basis {1, t}
* ``"F"`` on series: one F-coordinate per exponent in the common window
* ``"Q"`` on series: each F-coordinate further expanded over Q
* ``"K"`` on quaternions: K = Q(i) with left basis {1, j}
* ``"Q"`` on quaternions: the four rational coordinates
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional

from .errors import CentralPair, DivisionByZero, DuplicateAlpha, InsufficientPrecision, NotInImage
from .linalg import (
    FieldOps,
    SeriesOps,
    bareiss_rank,
    first_dependency,
    left_kernel,
    rank,
    rational_nullspace,
)
from .orepoly import OrePoly, central_interpolants, right_eval
from .quaternion import Quat
from .scalars import (
    ONE_MONO,
    MPoly,
    RatFunc,
    _merge_factors,
    _mono_lcm,
    mono_degree,
    mono_mul,
    mono_shift,
)
from .series import INF, SkewSeries, decompose_left, series_inv

INDEPENDENT = "independent"
DEPENDENT = "dependent"


# -- coordinatizers ---------------------------------------------------------


class Coordinatizer:
    """Maps elements to left coordinate vectors over a scalar ring."""

    name = ""

    def __init__(self, ops):
        self.ops = ops

    def vectors(self, elements):
        raise NotImplementedError

    def prefixes(self, elements):
        """Coordinate vectors on growing coordinate sets, ending with ``vectors``."""
        yield self.vectors(elements)

    def one(self, like):
        raise NotImplementedError


class SeriesOverK(Coordinatizer):
    name = "K"

    def __init__(self, precision=None):
        super().__init__(SeriesOps(precision))

    def vectors(self, elements):
        return [list(decompose_left(SkewSeries.coerce(e))) for e in elements]

    def one(self, like):
        return SkewSeries.one()


def _common_window(elements):
    ku = min(e.known_upto for e in elements)
    exps = sorted({x for e in elements for x in e.coeffs if x < ku})
    return ku, exps


class SeriesOverF(Coordinatizer):
    name = "F"

    def __init__(self):
        super().__init__(FieldOps(RatFunc.const(0), RatFunc.const(1)))

    def vectors(self, elements):
        elements = [SkewSeries.coerce(e) for e in elements]
        _, exps = _common_window(elements)
        zero = RatFunc.const(0)
        return [[e.coeffs.get(x, zero) for x in exps] for e in elements]

    def one(self, like):
        return SkewSeries.one()


def _over_common_den(fs):
    """Polynomials p_i with f_i = p_i / L for the factored lcm L of the denominators."""
    mono, factors = ONE_MONO, []
    for f in fs:
        if not f.is_zero():
            mono = _mono_lcm(mono, f.mono)
            factors = _merge_factors(factors, f.factors, max)
    return [MPoly() if f.is_zero() else f.num * f._cofactor(mono, factors) for f in fs]


class SeriesOverQ(Coordinatizer):
    """Rational coordinates: per exponent, numerators over a common denominator."""

    name = "Q"

    def __init__(self):
        super().__init__(FieldOps())

    def vectors(self, elements):
        *_, last = self.prefixes(elements)
        return last

    def prefixes(self, elements):
        elements = [SkewSeries.coerce(e) for e in elements]
        _, exps = _common_window(elements)
        zero = RatFunc.const(0)
        columns = [[] for _ in elements]
        for x in exps:
            polys = _over_common_den([e.coeffs.get(x, zero) for e in elements])
            monos = sorted({m for p in polys for m in p.terms}, key=str)
            for col, p in zip(columns, polys):
                col.extend(p.terms.get(m, Fraction(0)) for m in monos)
            yield [list(col) for col in columns]
        if not exps:
            yield columns

    def one(self, like):
        return SkewSeries.one()


class QuatOverK(Coordinatizer):
    name = "K"

    def __init__(self, alg):
        super().__init__(FieldOps(alg.zero, alg.one))
        self.alg = alg

    def vectors(self, elements):
        return [list(q.k_coords()) for q in elements]

    def one(self, like):
        return like.alg.one


class QuatOverQ(Coordinatizer):
    name = "Q"

    def __init__(self, alg):
        super().__init__(FieldOps())
        self.alg = alg

    def vectors(self, elements):
        return [list(q.coords()) for q in elements]

    def one(self, like):
        return like.alg.one


def coordinatizer(element, over: str, precision=None) -> Coordinatizer:
    over = over.upper()
    if isinstance(element, Quat):
        if over == "K":
            return QuatOverK(element.alg)
        if over in ("Q", "F"):
            return QuatOverQ(element.alg)
    else:
        if over == "K":
            return SeriesOverK(precision)
        if over == "F":
            return SeriesOverF()
        if over == "Q":
            return SeriesOverQ()
    raise ValueError(f"unknown scalar ring {over!r}")


# -- minimal polynomials -----------------------------------------------------


@dataclass
class MinPolyResult:
    verdict: str  # "algebraic" | "exceeds_bound" | "indeterminate"
    poly: Optional[OrePoly] = None
    degree: Optional[int] = None
    bound: Optional[int] = None
    reason: str = ""
    window: float = INF
    lift: int = 0  # poly annihilates t^lift * a * t^-lift

    @property
    def algebraic(self) -> bool:
        return self.verdict == "algebraic"

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "bound": self.bound}
        if self.poly is not None:
            out["poly"] = str(self.poly)
            out["degree"] = self.degree
        if self.reason:
            out["reason"] = self.reason
        if self.window != INF:
            out["window"] = self.window
        if self.lift:
            out["lift"] = self.lift
        return out


def _is_zero_result(value) -> bool:
    if isinstance(value, SkewSeries):
        return value.is_zero_on_window()
    if hasattr(value, "is_zero"):
        return value.is_zero()
    return value == 0


def residual_window(value, floor) -> float:
    """Known window length of a residual that should vanish."""
    if isinstance(value, SkewSeries):
        return value.known_upto - floor
    return INF


MAX_LIFT = 8


def _minpoly_once(a, over, bound, precision) -> MinPolyResult:
    coord = coordinatizer(a, over, precision)
    powers = [coord.one(a)]
    for _ in range(bound):
        powers.append(powers[-1] * a)
    try:
        vecs = coord.vectors(powers)
        found = first_dependency(vecs, coord.ops)
    except (InsufficientPrecision, DivisionByZero) as exc:
        return MinPolyResult("indeterminate", bound=bound, reason=str(exc))
    if found is None:
        return MinPolyResult("exceeds_bound", bound=bound)
    k, combo = found
    lead = combo[k]
    coeffs = [coord.ops.left_div(c, lead) for c in combo[: k + 1]]
    coeffs[k] = coord.ops.one
    poly = OrePoly(coeffs, var="X")
    residual = right_eval(poly, a)
    if not _is_zero_result(residual):
        raise ArithmeticError(f"relation {poly} does not annihilate {a}")
    floor = a.valuation() if isinstance(a, SkewSeries) else 0
    window = residual_window(residual, floor)
    if window <= 0:
        return MinPolyResult(
            "indeterminate", bound=bound, reason="precision window exhausted"
        )
    return MinPolyResult("algebraic", poly, k, bound, window=window)


def left_minpoly(
    a, over: str = "K", bound: int = 2, precision=None, max_lift: int = MAX_LIFT
) -> MinPolyResult:
    """Least-degree monic left relation sum c_i a^i = 0 with c_i in ``over``.

    Powers 1, a, ..., a^bound are coordinatized and scanned for the first
    left dependency; the monic relation is then checked by right
    evaluation at ``a``.

    Over K, if a power of ``a`` cannot be formed (NotInImage), the search
    runs on a.lift(n) instead: lifting is an injective endomorphism that
    preserves K, so the monic minimal polynomial of the lift is the lift
    of the minimal polynomial and its coefficients are unlifted.  When
    the coefficients are not themselves lifts (they need sigma^-1 of some
    x_i), the relation is returned for the lifted element and ``lift``
    records n.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    lifts = range(max_lift + 1) if isinstance(a, SkewSeries) and over.upper() == "K" else [0]
    last = None
    for n in lifts:
        try:
            res = _minpoly_once(a.lift(n) if n else a, over, bound, precision)
            if n and res.poly is not None:
                try:
                    res.poly = OrePoly([c.unlift(n) for c in res.poly.coeffs], var="X")
                except NotInImage:
                    res.lift = n
            return res
        except NotInImage as exc:
            last = exc
    raise last


def is_left_algebraic(a, over="K", bound=2, precision=None) -> bool:
    return left_minpoly(a, over, bound, precision).algebraic


# -- independence of shifted inverses ------------------------------------------


@dataclass
class IndependenceResult:
    verdict: str  # INDEPENDENT | DEPENDENT
    witness: Optional[list] = None
    window: float = INF
    inverses: list = field(default_factory=list)

    @property
    def independent(self) -> bool:
        return self.verdict == INDEPENDENT

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = [str(b) for b in self.witness]
        if self.window != INF:
            out["window"] = self.window
        return out


def shifted_inverses(a, alphas, precision=None):
    one = SkewSeries.one() if not isinstance(a, Quat) else a.alg.one
    out = []
    for alpha in alphas:
        diff = a - one * Fraction(alpha)
        if isinstance(diff, SkewSeries):
            out.append(series_inv(diff, precision))
        else:
            out.append(diff.inv())
    return out


def combine(betas, elements):
    acc = None
    for b, e in zip(betas, elements):
        term = b * e
        acc = term if acc is None else acc + term
    return acc


def lemma22_independence(a, alphas, over: str = "Q", precision=None) -> IndependenceResult:
    """Decide left independence of {(a - alpha_i)^-1} over ``over``.

    On windows a dependence can be missed but never invented, so an
    INDEPENDENT verdict is exact; a DEPENDENT verdict carries a witness
    whose combination is verified to vanish by substitution.
    """
    alphas = [Fraction(x) for x in alphas]
    if len(set(alphas)) != len(alphas):
        raise DuplicateAlpha("alphas must be distinct")
    invs = shifted_inverses(a, alphas, precision)
    coord = coordinatizer(a, over, precision)
    window = INF
    if isinstance(invs[0], SkewSeries):
        window = min(v.known_upto for v in invs) - min(v.valuation() for v in invs)
    # independence on a subset of coordinates is already exact
    for vecs in coord.prefixes(invs):
        if rank(vecs, coord.ops) == len(invs):
            return IndependenceResult(INDEPENDENT, window=window, inverses=invs)
    relations, _ = left_kernel(vecs, coord.ops)
    if not relations:
        return IndependenceResult(INDEPENDENT, window=window, inverses=invs)
    betas = relations[0]
    total = combine(betas, invs)
    if not _is_zero_result(total):
        raise ArithmeticError("dependence witness failed substitution")
    return IndependenceResult(DEPENDENT, betas, window, invs)


def dichotomy_polynomial(betas, alphas):
    """g(t) = sum beta_i f_i(t) with f_i = prod_{j != i} (t - alpha_j)."""
    _, fs = central_interpolants([Fraction(x) for x in alphas], var="X")
    g = None
    for b, f in zip(betas, fs):
        term = OrePoly([b * c for c in f.coeffs], var="X")
        g = term if g is None else g + term
    return g


@dataclass
class DichotomyCheck:
    consistent: bool
    independence: IndependenceResult
    minpoly: MinPolyResult
    g: Optional[OrePoly] = None


def lemma22_dichotomy(a, alphas, over="K", precision=None) -> DichotomyCheck:
    """Either a is algebraic or the inverses are independent.

    A dependence among n inverses yields a nonzero g of degree <= n-1 with
    g(a) = 0, so ExceedsBound at n-1 together with a dependence witness is
    an inconsistency.
    """
    ind = lemma22_independence(a, alphas, over, precision)
    n = len(alphas)
    mp = left_minpoly(a, over, max(1, n - 1), precision)
    if ind.independent:
        return DichotomyCheck(True, ind, mp)
    g = dichotomy_polynomial(ind.witness, alphas)
    ok = g is not None and not g.is_zero() and _is_zero_result(right_eval(g, a))
    ok = ok and mp.verdict != "exceeds_bound"
    return DichotomyCheck(ok, ind, mp, g)


# -- right algebraicity obstruction -------------------------------------------


def _x0_plus_t_powers(n: int):
    base = SkewSeries({0: RatFunc.var(0), 1: 1})
    out = [SkewSeries.one()]
    for _ in range(n):
        out.append(out[-1] * base)
    # coefficients are polynomials; keep the numerators
    return [{e: c.num for e, c in p.coeffs.items()} for p in out]


def coefficient_basis(degree: int, nvars: int):
    monos = [()]
    for d in range(1, degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            m = ()
            for v in combo:
                m = mono_mul(m, ((v, 1),))
            monos.append(m)
    return monos


@dataclass
class KernelResult:
    side: str
    n: int
    M: int
    precision: int
    dimension: int
    unknowns: int
    witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "n": self.n,
            "M": self.M,
            "precision": self.precision,
            "dimension": self.dimension,
            "unknowns": self.unknowns,
            "witnesses": [[str(h) for h in w] for w in self.witnesses],
        }


def right_alg_kernel(
    n: int,
    M: int,
    precision: Optional[int] = None,
    side: str = "right",
    coeff_degree: int = 2,
    coeff_vars: int = 3,
    witnesses: bool = True,
) -> KernelResult:
    """Kernel of (h_0, ..., h_n) -> sum (x0+t)^i h_i(t^2)  (``side="right"``).

    Each h_i = sum_{j<=M} c_ij t^(2j).  Because sigma twists the unknowns
    (a t^e c = a sigma^e(c) t^e), the map is not F-linear on the right;
    it is Q-linear, so every c_ij ranges over the Q-span of monomials of
    degree <= ``coeff_degree`` in x_0..x_{coeff_vars-1}.  ``side="left"``
    builds sum h_i(t^2) (x0+t)^i instead.  Equations are the coefficients
    of t^s * monomial for s < precision.

    Every unknown has weight i + 2j + deg(monomial) and every equation
    row has weight s + deg(output monomial); the system is block diagonal
    in the weight, and each block's rank is found by fraction-free
    elimination.
    """
    if n < 1 or M < 1:
        raise ValueError("n and M must be >= 1")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if precision is None:
        precision = 2 * (n + M) + 2
    powers = _x0_plus_t_powers(n)
    basis = coefficient_basis(coeff_degree, coeff_vars)
    unknowns = [(i, j, m) for i in range(n + 1) for j in range(M + 1) for m in basis]
    blocks: dict = {}
    for idx, (i, j, m) in enumerate(unknowns):
        w = i + 2 * j + mono_degree(m)
        cols = blocks.setdefault(w, {"cols": [], "rows": {}})
        col = len(cols["cols"])
        cols["cols"].append(idx)
        for e, a in powers[i].items():
            s = e + 2 * j
            if s >= precision:
                continue
            if side == "right":
                tm = mono_shift(m, e)
                items = ((mono_mul(am, tm), ac) for am, ac in a.terms.items())
            else:
                items = (
                    (mono_mul(m, am), ac) for am, ac in a.shift(2 * j).terms.items()
                )
            for mono, c in items:
                row = cols["rows"].setdefault((s, mono), {})
                row[col] = row.get(col, 0) + c
    dim = 0
    found = []
    for w in sorted(blocks):
        blk = blocks[w]
        ncols = len(blk["cols"])
        matrix = [[int(r.get(c, 0)) for c in range(ncols)] for r in blk["rows"].values()]
        nullity = ncols - bareiss_rank(matrix)
        dim += nullity
        if nullity and witnesses:
            for v in rational_nullspace(matrix, ncols):
                found.append(_kernel_vector_to_h(v, blk["cols"], unknowns, n))
    return KernelResult(side, n, M, precision, dim, len(unknowns), found)


def _kernel_vector_to_h(v, cols, unknowns, n):
    hs = [dict() for _ in range(n + 1)]
    for val, idx in zip(v, cols):
        if not val:
            continue
        i, j, m = unknowns[idx]
        poly = MPoly({m: val})
        hs[i][2 * j] = hs[i].get(2 * j, MPoly()) + poly
    return [SkewSeries({e: RatFunc(p) for e, p in h.items()}) for h in hs]


def kernel_relation_holds(hs, side="right") -> bool:
    """Substitute a kernel vector back into the defining sum (exact)."""
    base = SkewSeries({0: RatFunc.var(0), 1: 1})
    acc = SkewSeries.zero()
    power = SkewSeries.one()
    for h in hs:
        acc = acc + (power * h if side == "right" else h * power)
        power = power * base
    return acc.is_zero()


def monomial_witness(n: int) -> bool:
    """x0^(n-1) occurs with coefficient 1 in the t-coefficient of (x0+t)^n and
    in no t-coefficient of a lower power."""
    if n < 1:
        raise ValueError("n must be >= 1")
    powers = _x0_plus_t_powers(n)
    target = ((0, n - 1),) if n > 1 else ()

    def t_coeff(i):
        return powers[i].get(1, MPoly())

    if t_coeff(n).terms.get(target) != 1:
        return False
    return all(target not in t_coeff(i).terms for i in range(n))


# -- commutator gadget ---------------------------------------------------------


@dataclass
class Thm23Report:
    d: SkewSeries
    c: SkewSeries
    identity_holds: bool
    printed_identity_holds: bool
    c_in_N: bool
    one_minus_c_nonzero: bool
    window: float
    lift: int = 0

    @property
    def ok(self) -> bool:
        return self.identity_holds and self.c_in_N and self.one_minus_c_nonzero

    def to_dict(self) -> dict:
        return {
            "d": str(self.d),
            "c": str(self.c),
            "identity_holds": self.identity_holds,
            "printed_identity_holds": self.printed_identity_holds,
            "c_in_N": self.c_in_N,
            "one_minus_c_nonzero": self.one_minus_c_nonzero,
            "window": None if self.window == INF else self.window,
            "lift": self.lift,
        }


def _gadget(a, b, alpha, precision):
    a = SkewSeries.coerce(a)
    b = SkewSeries.coerce(b)
    s = a + Fraction(alpha)
    d = b * a - a * b
    if d.is_zero_on_window():
        raise CentralPair("ba - ab vanishes; a commutes with b")
    return a, b, s, d


def _thm23_once(a, b, alpha, precision) -> Thm23Report:
    a, b, s, d = _gadget(a, b, alpha, precision)
    c = series_inv(s, precision) * series_inv(b, precision) * s * b
    one_minus_c = 1 - c
    rhs = b * s * one_minus_c
    printed = b * s * (1 + c)
    window = min(d.known_upto, rhs.known_upto) - d.degmin()
    c_in_N = (not c.is_zero_on_window()) and c.degmin() == 0
    return Thm23Report(
        d=d,
        c=c,
        identity_holds=d.agrees(rhs),
        printed_identity_holds=d.agrees(printed),
        c_in_N=c_in_N,
        one_minus_c_nonzero=not one_minus_c.is_zero_on_window(),
        window=window,
    )


def thm23_identity(a, b, alpha=0, precision=None, max_lift: int = MAX_LIFT) -> Thm23Report:
    """Check d = b(a+alpha)(1 - c) with c = (a+alpha)^-1 b^-1 (a+alpha) b.

    If an inverse needs an unshift that fails, the check runs on the
    lifts t^n a t^-n and t^n b t^-n; lifting is an injective ring
    endomorphism, so the identity holds for the lifts iff it holds for
    the inputs, and ``lift`` records n.
    """
    a = SkewSeries.coerce(a)
    b = SkewSeries.coerce(b)
    last = None
    for n in range(max_lift + 1):
        try:
            rep = _thm23_once(a.lift(n), b.lift(n), alpha, precision)
        except NotInImage as exc:
            last = exc
            continue
        rep.lift = n
        return rep
    raise last


@dataclass
class SpanCheck:
    ok: bool
    betas: list
    reconstructed: SkewSeries
    expected: SkewSeries
    window: float
    lift: int = 0


def _span_once(a, b, alpha, betas, precision, bound):
    a, b, s, d = _gadget(a, b, alpha, precision)
    dinv_b = series_inv(d, precision) * b
    w = dinv_b * s
    if betas is None:
        mp = left_minpoly(w, "K", bound, precision, max_lift=0)
        if not mp.algebraic:
            raise ArithmeticError(f"no relation for w within degree {bound}: {mp.reason}")
        coeffs = list(mp.poly.coeffs)
        c0 = SkewSeries.coerce(coeffs[0])
        if c0.is_zero_on_window():
            raise ArithmeticError("minimal relation of w has zero constant term")
        ops = SeriesOps(precision)
        betas = [ops.left_div(c, c0) for c in coeffs[1:]]
    acc = SkewSeries.zero()
    wpow = SkewSeries.one()
    for beta in betas:
        acc = acc + beta * wpow * dinv_b
        wpow = wpow * w
    rec = -acc
    expected = series_inv(s, precision)
    window = min(rec.known_upto, expected.known_upto) - expected.degmin()
    return rec.agrees(expected), list(betas), rec, expected, window


def inverse_span_check(
    a, b, alpha=0, betas=None, precision=None, bound=2, max_lift: int = MAX_LIFT
) -> SpanCheck:
    """Rebuild (a+alpha)^-1 from a relation for w = d^-1 b (a+alpha).

    With sum_{k>=1} beta_k w^k + 1 = 0,
    (a+alpha)^-1 = -sum_k beta_k w^(k-1) d^-1 b.  ``betas`` (beta_1, ...)
    defaults to the normalized minimal polynomial of w over K.

    w usually has negative degmin, so its powers may need unshifts that
    fail; the whole identity is then checked after lifting every input by
    the same power of t, which is an injective ring endomorphism.
    """
    a = SkewSeries.coerce(a)
    b = SkewSeries.coerce(b)
    last = None
    for n in range(max_lift + 1):
        lb = None if betas is None else [SkewSeries.coerce(x).lift(n) for x in betas]
        try:
            ok, bs, rec, expected, window = _span_once(
                a.lift(n), b.lift(n), alpha, lb, precision, bound
            )
        except NotInImage as exc:
            last = exc
            continue
        try:
            bs = [x.unlift(n) for x in bs]
        except NotInImage:
            pass
        return SpanCheck(ok, bs, rec, expected, window, n)
    raise last


__all__ = [
    "MinPolyResult",
    "left_minpoly",
    "is_left_algebraic",
    "lemma22_independence",
    "lemma22_dichotomy",
    "right_alg_kernel",
    "kernel_relation_holds",
    "monomial_witness",
    "thm23_identity",
    "inverse_span_check",
    "coordinatizer",
    "INDEPENDENT",
    "DEPENDENT",
]

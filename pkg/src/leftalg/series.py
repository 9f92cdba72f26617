"""Truncated skew Laurent series over F with the twist t*a = sigma(a)*t.

A ``SkewSeries`` stores finitely many nonzero coefficients below
``known_upto``; coefficients at exponents >= known_upto are unknown.
``known_upto = inf`` means the element is exactly a Laurent polynomial.
"""

from __future__ import annotations

import math
from .errors import DivisionByZero, NotInImage, UndefinedDegmin
from .scalars import RatFunc, shift, unshift

INF = math.inf
DEFAULT_PRECISION = 12


def _twist(c: RatFunc, k: int) -> RatFunc:
    """sigma^k(c) for any integer k (negative k may raise NotInImage)."""
    if k >= 0:
        return shift(c, k)
    return unshift(c, -k)


class SkewSeries:
    __slots__ = ("coeffs", "known_upto")
    __hash__ = None

    def __init__(self, coeffs=None, known_upto=INF):
        out = {}
        if coeffs:
            for e, c in coeffs.items():
                if e >= known_upto:
                    continue
                c = RatFunc.coerce(c)
                if not c.is_zero():
                    out[int(e)] = c
        self.coeffs = out
        self.known_upto = known_upto

    @classmethod
    def _raw(cls, coeffs: dict, known_upto) -> SkewSeries:
        s = cls.__new__(cls)
        s.coeffs = coeffs
        s.known_upto = known_upto
        return s

    @classmethod
    def coerce(cls, value) -> SkewSeries:
        if isinstance(value, SkewSeries):
            return value
        return cls({0: RatFunc.coerce(value)})

    @classmethod
    def zero(cls) -> SkewSeries:
        return cls._raw({}, INF)

    @classmethod
    def one(cls) -> SkewSeries:
        return cls._raw({0: RatFunc.const(1)}, INF)

    @classmethod
    def monomial(cls, c, e: int) -> SkewSeries:
        return cls({e: c})

    # -- inspection -------------------------------------------------------

    def is_exact(self) -> bool:
        return self.known_upto == INF

    def is_zero(self) -> bool:
        """True only for the exact zero element."""
        return not self.coeffs and self.known_upto == INF

    def is_zero_on_window(self) -> bool:
        return not self.coeffs

    def valuation(self):
        """degmin if some coefficient is known nonzero, otherwise known_upto."""
        return min(self.coeffs) if self.coeffs else self.known_upto

    def degmin(self) -> int:
        if not self.coeffs:
            if self.known_upto == INF:
                raise UndefinedDegmin("degmin of the zero element")
            raise UndefinedDegmin(
                f"no nonzero coefficient known below t^{self.known_upto}"
            )
        return min(self.coeffs)

    def degmax(self) -> int:
        return max(self.coeffs)

    def coefficient(self, e: int) -> RatFunc:
        if e >= self.known_upto:
            raise IndexError(f"coefficient of t^{e} is outside the known window")
        return self.coeffs.get(e, RatFunc.const(0))

    def window_length(self):
        """Number of known terms starting at degmin."""
        return self.known_upto - self.valuation()

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e in self.coeffs)

    def truncate(self, known_upto) -> SkewSeries:
        known_upto = min(known_upto, self.known_upto)
        return SkewSeries._raw(
            {e: c for e, c in self.coeffs.items() if e < known_upto}, known_upto
        )

    def agrees(self, other, upto=None) -> bool:
        """Coefficients agree on every exponent known in both operands."""
        other = SkewSeries.coerce(other)
        bound = min(self.known_upto, other.known_upto)
        if upto is not None:
            bound = min(bound, upto)
        zero = RatFunc.const(0)
        for e in set(self.coeffs) | set(other.coeffs):
            if e >= bound:
                continue
            if self.coeffs.get(e, zero) != other.coeffs.get(e, zero):
                return False
        return True

    def __eq__(self, other):
        try:
            other = SkewSeries.coerce(other)
        except TypeError:
            return NotImplemented
        return self.known_upto == other.known_upto and self.agrees(other)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> SkewSeries:
        try:
            other = SkewSeries.coerce(other)
        except TypeError:
            return NotImplemented
        ku = min(self.known_upto, other.known_upto)
        out = {e: c for e, c in self.coeffs.items() if e < ku}
        for e, c in other.coeffs.items():
            if e >= ku:
                continue
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return SkewSeries._raw(out, ku)

    __radd__ = __add__

    def __neg__(self) -> SkewSeries:
        return SkewSeries._raw({e: -c for e, c in self.coeffs.items()}, self.known_upto)

    def __sub__(self, other) -> SkewSeries:
        try:
            other = SkewSeries.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> SkewSeries:
        return SkewSeries.coerce(other) - self

    def __mul__(self, other) -> SkewSeries:
        try:
            other = SkewSeries.coerce(other)
        except TypeError:
            return NotImplemented
        ku = min(
            self.valuation() + other.known_upto, self.known_upto + other.valuation()
        )
        out: dict = {}
        for j, b in other.coeffs.items():
            twisted: dict = {}
            for i, a in self.coeffs.items():
                e = i + j
                if e >= ku:
                    continue
                if i not in twisted:
                    twisted[i] = _twist(b, i)
                term = a * twisted[i]
                if e in out:
                    out[e] = out[e] + term
                else:
                    out[e] = term
        return SkewSeries._raw({e: c for e, c in out.items() if not c.is_zero()}, ku)

    def __rmul__(self, other) -> SkewSeries:
        return SkewSeries.coerce(other) * self

    def __pow__(self, n: int) -> SkewSeries:
        if n < 0:
            return series_inv(self) ** (-n)
        out = SkewSeries.one()
        for _ in range(n):
            out = out * self
        return out

    def inv(self, precision=None) -> SkewSeries:
        return series_inv(self, precision)

    def times_t_power(self, n: int) -> SkewSeries:
        """self * t^n (right multiplication never twists coefficients)."""
        return SkewSeries._raw(
            {e + n: c for e, c in self.coeffs.items()}, self.known_upto + n
        )

    def lift(self, n: int) -> SkewSeries:
        """t^n * self * t^-n, i.e. sigma^n applied to every coefficient.

        An injective ring endomorphism of D mapping K into K; it makes room
        for later unshifts.
        """
        if n == 0:
            return self
        return SkewSeries._raw(
            {e: shift(c, n) for e, c in self.coeffs.items()}, self.known_upto
        )

    def unlift(self, n: int) -> SkewSeries:
        """Inverse of ``lift``; raises NotInImage outside its image."""
        if n == 0:
            return self
        return SkewSeries._raw(
            {e: unshift(c, n) for e, c in self.coeffs.items()}, self.known_upto
        )

    def __str__(self) -> str:
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            cs = str(c)
            if e == 0:
                body = cs
            else:
                tp = "t" if e == 1 else f"t^{e}"
                if cs == "1":
                    body = tp
                elif cs == "-1":
                    body = "-" + tp
                elif len(c.num.terms) > 1:
                    body = f"({cs})*{tp}"
                else:
                    body = f"{cs}*{tp}"
            parts.append(body)
        if self.known_upto != INF:
            parts.append(f"O(t^{self.known_upto})")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self) -> str:
        return f"SkewSeries({self})"


T = SkewSeries._raw({1: RatFunc.const(1)}, INF)


def series(terms: dict, known_upto=INF) -> SkewSeries:
    return SkewSeries(terms, known_upto)


def _inv_degmin0(alpha: SkewSeries, length) -> SkewSeries:
    a = alpha.coeffs
    a0_inv = a[0].inv()
    b = [a0_inv]
    for k in range(1, length):
        acc = None
        for i in range(1, k + 1):
            ai = a.get(i)
            if ai is None or b[k - i].is_zero():
                continue
            term = ai * shift(b[k - i], i)
            acc = term if acc is None else acc + term
        b.append(RatFunc.const(0) if acc is None else -(a0_inv * acc))
    return SkewSeries._raw({k: c for k, c in enumerate(b) if not c.is_zero()}, length)


def series_inv(alpha: SkewSeries, precision=None) -> SkewSeries:
    """Two-sided inverse of a nonzero series.

    Writes alpha = beta * t^n with degmin(beta) = 0, inverts beta by the
    coefficient recurrence, then moves t^-n to the right.  The number of
    known terms is preserved; an exact element is expanded to
    ``precision`` terms (default ``DEFAULT_PRECISION``) unless its
    inverse is a monomial.
    """
    alpha = SkewSeries.coerce(alpha)
    if alpha.is_zero():
        raise DivisionByZero("inverse of the zero series")
    n = alpha.degmin()
    beta = alpha.times_t_power(-n)
    if beta.known_upto == INF:
        if len(beta.coeffs) == 1:
            length = INF
        else:
            length = DEFAULT_PRECISION if precision is None else precision
    else:
        length = beta.known_upto
    if length == INF:
        binv = SkewSeries._raw({0: beta.coeffs[0].inv()}, INF)
    else:
        binv = _inv_degmin0(beta, length)
    if n == 0:
        return binv
    out = {e - n: _twist(c, -n) for e, c in binv.coeffs.items()}
    return SkewSeries._raw(out, binv.known_upto - n)


def right_divide(q, p: SkewSeries, precision=None) -> SkewSeries:
    """q * p^-1 computed as (q * t^-n) * beta^-1 where p = beta * t^n.

    Avoids forming p^-1 when n > 0, so the result is total whenever
    degmin(q) >= degmin(p).
    """
    q = SkewSeries.coerce(q)
    p = SkewSeries.coerce(p)
    if p.is_zero():
        raise DivisionByZero("right division by the zero series")
    n = p.degmin()
    beta = p.times_t_power(-n)
    return q.times_t_power(-n) * series_inv(beta, precision)


def degmin(alpha) -> int:
    return SkewSeries.coerce(alpha).degmin()


def decompose_left(alpha: SkewSeries):
    """Split alpha = alpha1 + alpha2 * t with alpha1, alpha2 in K = F((t^2, sigma))."""
    alpha = SkewSeries.coerce(alpha)
    even = {e: c for e, c in alpha.coeffs.items() if e % 2 == 0}
    odd = {e - 1: c for e, c in alpha.coeffs.items() if e % 2}
    ku = alpha.known_upto
    return SkewSeries._raw(even, ku), SkewSeries._raw(odd, ku - 1)


def in_K(alpha) -> bool:
    return SkewSeries.coerce(alpha).is_even()


def n_contains(alpha) -> bool:
    """Membership in N = {alpha : degmin(alpha) = 0}."""
    return SkewSeries.coerce(alpha).degmin() == 0


def n_conjugate(alpha, beta, precision=None) -> SkewSeries:
    """beta^-1 * alpha * beta for alpha in N."""
    alpha = SkewSeries.coerce(alpha)
    beta = SkewSeries.coerce(beta)
    if not n_contains(alpha):
        raise ValueError("conjugation is only defined here for elements of N")
    return series_inv(beta, precision) * alpha * beta


def subgroup_N(op: str, alpha, beta=None, precision=None):
    if op == "contains":
        return n_contains(alpha)
    if op == "conjugate":
        return n_conjugate(alpha, beta, precision)
    raise ValueError(f"unknown N operation {op!r}")


__all__ = [
    "INF",
    "DEFAULT_PRECISION",
    "NotInImage",
    "SkewSeries",
    "T",
    "series",
    "series_inv",
    "right_divide",
    "degmin",
    "decompose_left",
    "in_K",
    "n_contains",
    "n_conjugate",
    "subgroup_N",
]

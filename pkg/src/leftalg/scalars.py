"""Exact arithmetic in F = Q(x0, x1, ...) and the shift endomorphism.

A monomial is a tuple of ``(variable_index, exponent)`` pairs sorted by
index, with no zero exponents; ``()`` is the constant monomial.  An
``MPoly`` maps monomials to nonzero ``Fraction`` coefficients.  A
``RatFunc`` is a numerator ``MPoly`` over a denominator kept as a monomial
times primitive polynomial factors.  It is normalized by rational content,
common monomial factors and exact division by stored factors only, so two
equal rational functions may be stored differently.  Equality is decided by
cross-multiplication.

The shift ``sigma`` sends x_i to x_{i+1}.  It is injective but x0 is not in
its image, so ``unshift`` is partial.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Union

from .errors import DivisionByZero, NotInImage

Monomial = tuple  # tuple[tuple[int, int], ...]

ONE_MONO: Monomial = ()


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_div(m1: Monomial, m2: Monomial):
    """m1 / m2 if m2 divides m1, else None."""
    if not m2:
        return m1
    e1 = dict(m1)
    for v, e in m2:
        have = e1.get(v, 0)
        if have < e:
            return None
        if have == e:
            del e1[v]
        else:
            e1[v] = have - e
    return tuple(sorted(e1.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


@lru_cache(maxsize=1 << 16)
def mono_key(m: Monomial):
    """Graded lexicographic sort key (x0 > x1 > ...); larger key = larger monomial."""
    return (mono_degree(m), tuple((-v, e) for v, e in m))


def mono_shift(m: Monomial, k: int) -> Monomial:
    return tuple((v + k, e) for v, e in m)


def mono_str(m: Monomial) -> str:
    return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in m)


def _mono_gcd(monos: Iterable[Monomial]) -> Monomial:
    it = iter(monos)
    common = dict(next(it))
    for m in it:
        if not common:
            break
        md = dict(m)
        for v in list(common):
            e = md.get(v, 0)
            if e == 0:
                del common[v]
            elif e < common[v]:
                common[v] = e
    return tuple(sorted(common.items()))


def _may_divide(num_terms, den_terms) -> bool:
    """Cheap necessary conditions for den | num: per-variable degree bounds and extreme terms."""
    if len(num_terms) == 1 and len(den_terms) > 1:
        return False
    hi_n, lo_n = _degree_bounds(num_terms)
    hi_d, lo_d = _degree_bounds(den_terms)
    for v, e in hi_d.items():
        if hi_n.get(v, 0) < e:
            return False
        if lo_n.get(v, 0) < lo_d.get(v, 0):
            return False
    top_n = max(num_terms, key=mono_key)
    top_d = max(den_terms, key=mono_key)
    if mono_div(top_n, top_d) is None:
        return False
    bot_n = min(num_terms, key=mono_key)
    bot_d = min(den_terms, key=mono_key)
    return mono_div(bot_n, bot_d) is not None


def _degree_bounds(terms):
    hi: dict = {}
    lo: dict = {}
    first = True
    for m in terms:
        e = dict(m)
        for v, k in e.items():
            if k > hi.get(v, 0):
                hi[v] = k
        if first:
            lo = dict(e)
            first = False
        else:
            for v in list(lo):
                k = e.get(v, 0)
                if k < lo[v]:
                    if k:
                        lo[v] = k
                    else:
                        del lo[v]
    return hi, lo


class MPoly:
    """Sparse polynomial in x0, x1, ... with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict) -> MPoly:
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> MPoly:
        c = Fraction(c)
        return cls._raw({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, i: int) -> MPoly:
        return cls._raw({((i, 1),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        return self.terms.get(ONE_MONO, Fraction(0))

    def leading(self):
        m = max(self.terms, key=mono_key)
        return m, self.terms[m]

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: MPoly) -> MPoly:
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly._raw(out)

    def __neg__(self) -> MPoly:
        return MPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: MPoly) -> MPoly:
        return self + (-other)

    def __mul__(self, other: MPoly) -> MPoly:
        if not self.terms or not other.terms:
            return MPoly._raw({})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MPoly._raw(out)

    def scale(self, c) -> MPoly:
        if not c:
            return MPoly._raw({})
        return MPoly._raw({m: v * c for m, v in self.terms.items()})

    def mono_times(self, mono: Monomial) -> MPoly:
        return MPoly._raw({mono_mul(m, mono): c for m, c in self.terms.items()})

    def mono_divide(self, mono: Monomial) -> MPoly:
        return MPoly._raw({mono_div(m, mono): c for m, c in self.terms.items()})

    def shift(self, k: int) -> MPoly:
        if k == 0:
            return self
        return MPoly._raw({mono_shift(m, k): c for m, c in self.terms.items()})

    def exact_div(self, other: MPoly):
        """Quotient self / other when the division is exact, else None."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if not self.terms:
            return MPoly._raw({})
        if not _may_divide(self.terms, other.terms):
            return None
        lm, lc = other.leading()
        idx = sorted({v for m in self.terms for v, _ in m} | {v for m in other.terms for v, _ in m})

        def heap_key(m):
            e = dict(m)
            return (-mono_degree(m),) + tuple(-e.get(v, 0) for v in idx)

        rem = dict(self.terms)
        heap = [(heap_key(m), m) for m in rem]
        heapq.heapify(heap)
        quot: dict = {}
        while heap:
            _, m = heapq.heappop(heap)
            if m not in rem:
                continue
            q = mono_div(m, lm)
            if q is None:
                return None
            c = rem[m] / lc
            quot[q] = c
            for om, oc in other.terms.items():
                mm = mono_mul(om, q)
                old = rem.get(mm)
                s = (old or 0) - c * oc
                if s:
                    rem[mm] = s
                    if old is None:
                        heapq.heappush(heap, (heap_key(mm), mm))
                else:
                    rem.pop(mm, None)
        return MPoly._raw(quot)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=mono_key, reverse=True):
            c = self.terms[m]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = mono_str(m)
            else:
                body = f"{a}*{mono_str(m)}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def _content_factor(p: MPoly) -> Fraction:
    """Rational s such that s*p has coprime integer coefficients and positive leading term."""
    nums = [c.numerator for c in p.terms.values()]
    dens = [c.denominator for c in p.terms.values()]
    g = 0
    for n in nums:
        g = gcd(g, n)
    d = 1
    for x in dens:
        d = lcm(d, x)
    s = Fraction(d, g)
    if p.leading()[1] < 0:
        s = -s
    return s


Scalar = Union[int, Fraction]


def _mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    d = dict(m1)
    for v, e in m2:
        if e > d.get(v, 0):
            d[v] = e
    return tuple(sorted(d.items()))


def _merge_factors(f1, f2, combine):
    out = list(f1)
    for p, e in f2:
        for idx, (q, k) in enumerate(out):
            if q.terms == p.terms:
                out[idx] = (q, combine(k, e))
                break
        else:
            out.append((p, combine(0, e)))
    return out


def _factor_exp(factors, p) -> int:
    for q, k in factors:
        if q.terms == p.terms:
            return k
    return 0


class RatFunc:
    """Element of F = Q(x0, x1, ...).

    The denominator is kept as ``mono * prod(p_k ** e_k)``: a monomial
    times primitive polynomials with positive leading coefficient, so it
    has content 1 and positive leading term.  Monomial and polynomial
    factors that divide the numerator exactly are cancelled; no
    multivariate gcd is taken, so the representation is not canonical.
    """

    __slots__ = ("num", "mono", "factors", "_den")
    __hash__ = None

    def __init__(self, num, den=None):
        if not isinstance(num, MPoly):
            num = MPoly.const(num)
        if den is None:
            den = MPoly.const(1)
        elif not isinstance(den, MPoly):
            den = MPoly.const(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        mono = _mono_gcd(den.terms)
        rest = den.mono_divide(mono) if mono else den
        if rest.is_constant():
            num = num.scale(1 / rest.constant_value())
            factors = []
        else:
            s = _content_factor(rest)
            num = num.scale(s)
            factors = [(rest.scale(s), 1)]
        self._set(*_normalize(num, mono, factors))

    def _set(self, num, mono, factors):
        self.num = num
        self.mono = mono
        self.factors = factors
        self._den = None

    @classmethod
    def _make(cls, num, mono, factors) -> RatFunc:
        r = cls.__new__(cls)
        r._set(*_normalize(num, mono, factors))
        return r

    @classmethod
    def _raw(cls, num, mono=ONE_MONO, factors=()) -> RatFunc:
        r = cls.__new__(cls)
        r._set(num, mono, tuple(factors))
        return r

    @property
    def den(self) -> MPoly:
        if self._den is None:
            d = MPoly._raw({self.mono: Fraction(1)})
            for p, e in self.factors:
                for _ in range(e):
                    d = d * p
            self._den = d
        return self._den

    @classmethod
    def var(cls, i: int) -> RatFunc:
        return cls._raw(MPoly.var(i))

    @classmethod
    def const(cls, c) -> RatFunc:
        return cls._raw(MPoly.const(c))

    @staticmethod
    def coerce(x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MPoly):
            return RatFunc._raw(x)
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.mono and not self.factors

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_value()

    def variables(self) -> set:
        out = self.num.variables() | {v for v, _ in self.mono}
        for p, _ in self.factors:
            out |= p.variables()
        return out

    def _same_den(self, other: RatFunc) -> bool:
        if self.mono != other.mono or len(self.factors) != len(other.factors):
            return False
        return all(_factor_exp(other.factors, p) == e for p, e in self.factors)

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self._same_den(other):
            return self.num.terms == other.num.terms
        return (self.num * other.den).terms == (other.num * self.den).terms

    def _cofactor(self, mono, factors) -> MPoly:
        """(common denominator) / (own denominator) as a polynomial."""
        out = MPoly._raw({mono_div(mono, self.mono): Fraction(1)})
        for p, e in factors:
            for _ in range(e - _factor_exp(self.factors, p)):
                out = out * p
        return out

    def __add__(self, other) -> RatFunc:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self._same_den(other):
            return RatFunc._make(self.num + other.num, self.mono, list(self.factors))
        mono = _mono_lcm(self.mono, other.mono)
        factors = _merge_factors(self.factors, other.factors, max)
        num = self.num * self._cofactor(mono, factors) + other.num * other._cofactor(
            mono, factors
        )
        return RatFunc._make(num, mono, factors)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc._raw(-self.num, self.mono, self.factors)

    def __sub__(self, other) -> RatFunc:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> RatFunc:
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc.const(0)
            return RatFunc._raw(self.num.scale(Fraction(other)), self.mono, self.factors)
        if not isinstance(other, RatFunc):
            if isinstance(other, MPoly):
                other = RatFunc._raw(other)
            else:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc.const(0)
        return RatFunc._make(
            self.num * other.num,
            mono_mul(self.mono, other.mono),
            _merge_factors(self.factors, other.factors, lambda a, b: a + b),
        )

    __rmul__ = __mul__

    def inv(self) -> RatFunc:
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero in F")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> RatFunc:
        return self * RatFunc.coerce(other).inv()

    def __rtruediv__(self, other) -> RatFunc:
        return RatFunc.coerce(other) * self.inv()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inv() ** (-n)
        out = RatFunc.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _shifted(self, k: int) -> RatFunc:
        return RatFunc._raw(
            self.num.shift(k),
            mono_shift(self.mono, k),
            tuple((p.shift(k), e) for p, e in self.factors),
        )

    def shift(self, k: int = 1) -> RatFunc:
        return shift(self, k)

    def unshift(self, k: int = 1) -> RatFunc:
        return unshift(self, k)

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1 or "/" in num:
            num = f"({num})"
        parts = []
        if self.mono:
            parts.append(mono_str(self.mono))
        for p, e in self.factors:
            body = f"({p})"
            parts.append(body if e == 1 else f"{body}^{e}")
        den = "*".join(parts)
        if len(parts) > 1 or "*" in den:
            if not (len(parts) == 1 and parts[0].startswith("(") and parts[0].endswith(")")):
                den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _normalize(num: MPoly, mono: Monomial, factors):
    if num.is_zero():
        return num, ONE_MONO, ()
    if mono:
        common = _mono_gcd(list(num.terms) + [mono])
        if common:
            num = num.mono_divide(common)
            mono = mono_div(mono, common)
    kept = []
    for p, e in factors:
        while e > 0:
            q = num.exact_div(p)
            if q is None:
                break
            num = q
            e -= 1
        if e > 0:
            kept.append((p, e))
    return num, mono, tuple(kept)


def x(i: int) -> RatFunc:
    """The variable x_i as an element of F."""
    return RatFunc.var(i)


def shift(f, k: int = 1) -> RatFunc:
    """sigma^k(f): raise every variable index by k."""
    if k < 0:
        raise ValueError("shift amount must be non-negative")
    f = RatFunc.coerce(f)
    if k == 0:
        return f
    return f._shifted(k)


def unshift(f, k: int = 1) -> RatFunc:
    """The g with shift(g, k) == f, read off the stored representation.

    Raises NotInImage if some stored variable has index below k.  This
    can reject a fraction whose fully reduced form would be acceptable.
    """
    if k < 0:
        raise ValueError("unshift amount must be non-negative")
    f = RatFunc.coerce(f)
    if k == 0:
        return f
    if any(v < k for v in f.variables()):
        raise NotInImage(f, k)
    return f._shifted(-k)

"""Generalized quaternion algebras (a, b | Q) with exact rational entries.

Relations: i^2 = a, j^2 = b, ij = -ji = k.  The maximal subfield used
throughout is K = Q(i), and D is a left K-space with ordered basis
{1, j}: w + xi + yj + zk = (w + xi) + (y + zi) j.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import ParseError, ZeroNorm
from .orepoly import OrePoly
from .rng import SplitMix64

KNOWN_DIVISION = {
    (Fraction(-1), Fraction(-1)),
    (Fraction(-1), Fraction(-3)),
    (Fraction(-2), Fraction(-5)),
}


def find_isotropic(a, b, bound: int = 12):
    """Search integers |x|,|y|,|z| <= bound with a x^2 + b y^2 = z^2, not all zero."""
    a, b = Fraction(a), Fraction(b)
    for xx, yy in product(range(bound + 1), repeat=2):
        if xx == 0 and yy == 0:
            continue
        rhs = a * xx * xx + b * yy * yy
        if rhs < 0 or rhs.denominator != 1:
            continue
        z = rhs.numerator
        r = math.isqrt(z)
        if r * r == z and r <= bound:
            return (xx, yy, r)
    return None


@dataclass(frozen=True)
class QAlgebra:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0 or self.b == 0:
            raise ValueError("quaternion parameters must be nonzero")

    @classmethod
    def division(cls, a, b, search_bound: int = 12) -> QAlgebra:
        """Build (a, b | Q) for use as a division ring.

        Preset anisotropic parameters are accepted silently.  Others are
        refuted if a small isotropic vector exists, and otherwise accepted
        with a warning since the search cannot prove anisotropy.
        """
        alg = cls(a, b)
        if (alg.a, alg.b) in KNOWN_DIVISION:
            return alg
        witness = find_isotropic(alg.a, alg.b, search_bound)
        if witness is not None:
            raise ValueError(
                f"({alg.a}, {alg.b} | Q) splits: isotropic vector {witness}"
            )
        warnings.warn(
            f"({alg.a}, {alg.b} | Q) is not a preset division algebra; "
            f"no isotropic vector found up to {search_bound}",
            stacklevel=2,
        )
        return alg

    def __call__(self, w=0, x=0, y=0, z=0) -> Quat:
        return Quat(self, w, x, y, z)

    @property
    def one(self) -> Quat:
        return Quat(self, 1)

    @property
    def zero(self) -> Quat:
        return Quat(self)

    @property
    def i(self) -> Quat:
        return Quat(self, 0, 1)

    @property
    def j(self) -> Quat:
        return Quat(self, 0, 0, 1)

    @property
    def k(self) -> Quat:
        return Quat(self, 0, 0, 0, 1)

    def kelem(self, re, im=0) -> Quat:
        """re + im*i as an element of K = Q(i)."""
        return Quat(self, re, im)

    def k_basis(self):
        return (self.one, self.j)

    def parse(self, text: str) -> Quat:
        return parse_quat(text, self)

    def __str__(self) -> str:
        return f"({self.a}, {self.b} | Q)"


class Quat:
    __slots__ = ("alg", "w", "x", "y", "z")

    def __init__(self, alg: QAlgebra, w=0, x=0, y=0, z=0):
        self.alg = alg
        self.w = Fraction(w)
        self.x = Fraction(x)
        self.y = Fraction(y)
        self.z = Fraction(z)

    def _new(self, w, x, y, z) -> Quat:
        q = Quat.__new__(Quat)
        q.alg, q.w, q.x, q.y, q.z = self.alg, w, x, y, z
        return q

    def _coerce(self, other) -> Quat:
        if isinstance(other, Quat):
            if other.alg != self.alg:
                raise ValueError("quaternions from different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return Quat(self.alg, other)
        raise TypeError(f"cannot combine Quat with {type(other).__name__}")

    def coords(self):
        return (self.w, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def is_central(self) -> bool:
        return not (self.x or self.y or self.z)

    def in_K(self) -> bool:
        return not (self.y or self.z)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coords() == other.coords()

    def __hash__(self):
        return hash((self.alg, self.coords()))

    def __add__(self, other) -> Quat:
        o = self._coerce(other)
        return self._new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self) -> Quat:
        return self._new(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other) -> Quat:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Quat:
        return self._coerce(other) - self

    def __mul__(self, other) -> Quat:
        if isinstance(other, (int, Fraction)):
            return self._new(self.w * other, self.x * other, self.y * other, self.z * other)
        o = self._coerce(other)
        a, b = self.alg.a, self.alg.b
        w1, x1, y1, z1 = self.coords()
        w2, x2, y2, z2 = o.coords()
        return self._new(
            w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
            w1 * x2 + x1 * w2 - b * y1 * z2 + b * z1 * y2,
            w1 * y2 + y1 * w2 + a * x1 * z2 - a * z1 * x2,
            w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
        )

    def __rmul__(self, other) -> Quat:
        return self._coerce(other) * self

    def conj(self) -> Quat:
        return self._new(self.w, -self.x, -self.y, -self.z)

    def trace(self) -> Fraction:
        return 2 * self.w

    def norm(self) -> Fraction:
        a, b = self.alg.a, self.alg.b
        return self.w**2 - a * self.x**2 - b * self.y**2 + a * b * self.z**2

    def inv(self) -> Quat:
        n = self.norm()
        if n == 0:
            if self.is_zero():
                raise ZeroNorm("inverse of zero quaternion")
            raise ZeroNorm(f"{self} has norm 0; {self.alg} is not a division algebra")
        return self.conj() * (1 / n)

    def __truediv__(self, other) -> Quat:
        return self * self._coerce(other).inv()

    def __pow__(self, n: int) -> Quat:
        if n < 0:
            return self.inv() ** (-n)
        out = self.alg.one
        for _ in range(n):
            out = out * self
        return out

    def k_coords(self):
        """Left coordinates over K = Q(i) in the basis {1, j}."""
        return (self.alg.kelem(self.w, self.x), self.alg.kelem(self.y, self.z))

    def __str__(self) -> str:
        parts = []
        for c, u in zip(self.coords(), ("", "i", "j", "k")):
            if not c:
                continue
            if u and abs(c) == 1:
                body = u
            elif u:
                body = f"{abs(c)}{u}" if c.denominator == 1 else f"{abs(c)}*{u}"
            else:
                body = str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def __repr__(self) -> str:
        return f"Quat({self})"


_QTERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*(?P<star>\*)?\s*(?P<unit>[ijk])?\s*"
)


def parse_quat(text: str, alg: QAlgebra) -> Quat:
    """Parse literals such as ``1 + 2i - 3j + k`` or ``1/2 - 3/4*k``."""
    if not text.strip():
        raise ParseError("empty quaternion literal", 0, {"number", "i", "j", "k"})
    vals = [Fraction(0)] * 4
    pos = 0
    first = True
    while pos < len(text):
        m = _QTERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError("unexpected character", pos, {"+", "-", "number", "i", "j", "k"})
        sign, coef, star, unit = m.group("sign", "coef", "star", "unit")
        if not first and sign is None:
            raise ParseError("missing operator", m.start(), {"+", "-"})
        if coef is None and unit is None:
            raise ParseError("empty term", m.end(), {"number", "i", "j", "k"})
        if star and (coef is None or unit is None):
            raise ParseError("misplaced '*'", m.start("star"), {"i", "j", "k"})
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        vals["_ijk".index(unit) if unit else 0] += c
        pos = m.end()
        first = False
    return Quat(alg, *vals)


def quat_minpoly_center(q: Quat) -> OrePoly:
    """Minimal polynomial of q over the center Q."""
    if q.is_central():
        return OrePoly([-q.w, Fraction(1)])
    return OrePoly([q.norm(), -q.trace(), Fraction(1)])


def commutator(u: Quat, v: Quat) -> Quat:
    return u * v * u.inv() * v.inv()


def random_unit(alg: QAlgebra, rng: SplitMix64, span: int = 3) -> Quat:
    while True:
        q = Quat(alg, *(rng.randint(-span, span) for _ in range(4)))
        if q.norm() != 0:
            return q


def derived_element(alg: QAlgebra, level: int, rng: SplitMix64, span: int = 3) -> Quat:
    """A nested commutator of depth ``level`` built from random units."""
    if level == 0:
        return random_unit(alg, rng, span)
    return commutator(
        derived_element(alg, level - 1, rng, span),
        derived_element(alg, level - 1, rng, span),
    )


def sample_derived(alg: QAlgebra, level: int, count: int, seed: int, factors: int = 2):
    """``count`` elements of D^(level), each a product of nested commutators."""
    if level < 1:
        raise ValueError("derived level must be >= 1")
    out = []
    for idx in range(count):
        rng = SplitMix64.for_index(seed, idx)
        q = alg.one
        for _ in range(factors):
            q = q * derived_element(alg, level, rng)
        out.append(q)
    return out

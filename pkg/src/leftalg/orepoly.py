"""Skew polynomials sum(a_i t^i) with coefficients written on the left.

The coefficient ring is anything supporting ``+``, ``-`` and ``*``; the
twist ``sigma`` is a callable applied when ``t`` moves rightward past a
coefficient (``t*a = sigma(a)*t``).  Without a twist the variable is
central and this is an ordinary polynomial ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import DuplicateAlpha


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


def _identity(c):
    return c


class OrePoly:
    __slots__ = ("coeffs", "sigma", "var")
    __hash__ = None

    def __init__(self, coeffs: Sequence, sigma: Optional[Callable] = None, var: str = "t"):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.sigma = sigma
        self.var = var

    def _like(self, coeffs) -> OrePoly:
        return OrePoly(coeffs, self.sigma, self.var)

    def _twist(self, c, k: int):
        if self.sigma is None:
            return c
        for _ in range(k):
            c = self.sigma(c)
        return c

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            if self.degree <= 0:
                return (self.coeffs[0] if self.coeffs else 0) == other
            return False
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __add__(self, other: OrePoly) -> OrePoly:
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            if i >= len(self.coeffs):
                out.append(other.coeffs[i])
            elif i >= len(other.coeffs):
                out.append(self.coeffs[i])
            else:
                out.append(self.coeffs[i] + other.coeffs[i])
        return self._like(out)

    def __neg__(self) -> OrePoly:
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other: OrePoly) -> OrePoly:
        return self + (-other)

    def __mul__(self, other) -> OrePoly:
        if not isinstance(other, OrePoly):
            return self._like([c * other for c in self.coeffs])
        return ore_mul(self, other)

    def __rmul__(self, scalar) -> OrePoly:
        return self._like([scalar * c for c in self.coeffs])

    def right_eval(self, a):
        return right_eval(self, a)

    def left_eval(self, a):
        return left_eval(self, a)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
                continue
            p = self.var if i == 1 else f"{self.var}^{i}"
            if cs == "1":
                parts.append(p)
            elif cs == "-1":
                parts.append("-" + p)
            elif " " in cs or "/" in cs:
                parts.append(f"({cs})*{p}")
            else:
                parts.append(f"{cs}*{p}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"OrePoly({self})"


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    """Product using t^i * b = sigma^i(b) * t^i."""
    if f.is_zero() or g.is_zero():
        return f._like([])
    out: list = [None] * (len(f.coeffs) + len(g.coeffs) - 1)
    for j, b in enumerate(g.coeffs):
        for i, a in enumerate(f.coeffs):
            term = a * f._twist(b, i)
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    return f._like([0 if c is None else c for c in out])


def right_eval(f: OrePoly, a):
    """f(a) = sum a_i * a^i, coefficients on the left of the powers."""
    if f.is_zero():
        return 0
    acc = f.coeffs[0]
    power = None
    for c in f.coeffs[1:]:
        power = a if power is None else power * a
        if not _is_zero(c):
            acc = acc + c * power
    return acc


def left_eval(f: OrePoly, a):
    """sum a^i * a_i, coefficients on the right of the powers."""
    if f.is_zero():
        return 0
    acc = f.coeffs[0]
    power = None
    for c in f.coeffs[1:]:
        power = a if power is None else power * a
        if not _is_zero(c):
            acc = acc + power * c
    return acc


def linear(alpha, one=Fraction(1), sigma=None, var: str = "t") -> OrePoly:
    """t - alpha."""
    return OrePoly([-alpha, one], sigma, var)


def central_interpolants(alphas, one=Fraction(1), var: str = "t"):
    """f = (t - a_1)...(t - a_n) and f_i = f / (t - a_i) for central a_i.

    Returns ``(f, [f_1, ..., f_n])``.
    """
    alphas = list(alphas)
    for i, a in enumerate(alphas):
        for b in alphas[:i]:
            if a == b:
                raise DuplicateAlpha(f"repeated alpha {a}")
    f = OrePoly([one], var=var)
    for a in alphas:
        f = f * linear(a, one, var=var)
    fs = []
    for i in range(len(alphas)):
        fi = OrePoly([one], var=var)
        for j, a in enumerate(alphas):
            if j != i:
                fi = fi * linear(a, one, var=var)
        fs.append(fi)
    return f, fs

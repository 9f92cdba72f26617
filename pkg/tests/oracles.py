"""Independent reference computations built on sympy."""

import sympy

from leftalg.scalars import MPoly, RatFunc

XS = sympy.symbols("x0:12")


def poly_to_sympy(p: MPoly):
    out = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, e in mono:
            term *= XS[v] ** e
        out += term
    return out


def to_sympy(f):
    f = RatFunc.coerce(f)
    return poly_to_sympy(f.num) / poly_to_sympy(f.den)


def same(f, expr) -> bool:
    return sympy.cancel(to_sympy(f) - expr) == 0

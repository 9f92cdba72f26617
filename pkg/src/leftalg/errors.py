"""Exception types shared across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class NotInImage(ArithmeticError):
    """An element is outside the image of a power of the shift endomorphism.

    Raised whenever a negative power of ``t`` has to be moved past a
    coefficient that is not a shifted rational function.
    """

    def __init__(self, value, k):
        super().__init__(f"{value} is not in the image of sigma^{k}")
        self.value = value
        self.k = k


class UndefinedDegmin(ArithmeticError):
    pass


class InsufficientPrecision(ArithmeticError):
    pass


class ZeroNorm(ZeroDivisionError):
    pass


class DuplicateAlpha(ValueError):
    pass


class CentralPair(ArithmeticError):
    """ba - ab vanished for the chosen pair."""


class BasisNotIndependent(ValueError):
    pass


class XCentral(ValueError):
    pass


class BoundViolated(ArithmeticError):
    def __init__(self, m, d):
        super().__init__(f"operator degree m={m} exceeds the bound d={d}")
        self.m = m
        self.d = d


class ParseError(ValueError):
    def __init__(self, message, offset, expected=()):
        exp = ", ".join(sorted(expected))
        text = f"{message} at offset {offset}"
        if exp:
            text += f" (expected one of: {exp})"
        super().__init__(text)
        self.offset = offset
        self.expected = frozenset(expected)

"""Exception hierarchy shared by every module of the package."""


class SkewError(Exception):
    """Base class for all library errors."""


class MixedFields(SkewError, ValueError):
    pass


class DivisionByZero(SkewError, ZeroDivisionError):
    pass


class Unsupported(SkewError, NotImplementedError):
    pass


class UnsupportedField(Unsupported):
    pass


class ZeroConjugator(SkewError, ValueError):
    pass


class DivisionByZeroPoly(SkewError, ZeroDivisionError):
    pass


class DomainMismatch(SkewError, ValueError):
    pass


class NotInvariant(SkewError, ValueError):
    pass


class NotInvertible(SkewError, ValueError):
    pass


class NotConvex(SkewError, ValueError):
    pass


class NotGLinear(SkewError, ValueError):
    pass


class NotActionPreserving(SkewError, ValueError):
    pass


class IncompleteCover(SkewError, ValueError):
    pass


class ZeroDenominator(SkewError, ZeroDivisionError):
    pass


class ZeroInverse(SkewError, ZeroDivisionError):
    pass


class UndefinedAtPoint(SkewError, ArithmeticError):
    """The rational function is not defined on the conjugacy class of the point."""


class NotSemiInvariant(SkewError, ValueError):
    pass


class ReducibleDenominator(SkewError, ValueError):
    pass


class NotConjugate(SkewError, ValueError):
    pass


class ConfigError(SkewError, ValueError):
    pass


class UnknownLiteral(SkewError, ValueError):
    pass


class ExprSyntaxError(SkewError, ValueError):
    """Malformed expression; ``offset`` is the byte offset of the failure."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset

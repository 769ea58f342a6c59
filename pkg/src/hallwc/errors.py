"""Exception types shared across the package."""


class HallError(Exception):
    """Base class for all errors raised by hallwc."""


class DivisionByZero(HallError, ZeroDivisionError):
    pass


class ParseError(HallError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PoleElsewhere(HallError, ValueError):
    """The rational function has a pole outside the allowed set of points."""


class PoleAtPoint(HallError, ValueError):
    pass


class PoleAtOne(PoleAtPoint):
    """An epsilon invariant failed to be regular at q = 1."""


class VarCountMismatch(HallError, ValueError):
    pass


class SizeCap(HallError, ValueError):
    pass


class NonDominant(HallError, ValueError):
    pass


class NotACharacter(HallError, ValueError):
    pass


class DimMismatch(HallError, ValueError):
    pass


class ZeroDenominator(HallError, ValueError):
    pass


class NotAcyclic(HallError, ValueError):
    pass


class MissingEntry(HallError, KeyError):
    pass


class DominanceViolated(HallError, ValueError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class DegreeOverflow(HallError, ValueError):
    pass


class NotLieElement(HallError, ArithmeticError):
    pass

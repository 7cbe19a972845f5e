"""Exception hierarchy shared by every idealdb module."""


class IdealDBError(Exception):
    """Base class for all errors raised by idealdb."""


class DivisionByZero(IdealDBError, ZeroDivisionError):
    pass


class RingMismatch(IdealDBError):
    pass


class UnknownSymbol(IdealDBError, KeyError):
    def __str__(self):
        # KeyError quotes its argument; keep the plain message.
        return str(self.args[0]) if self.args else ""


class ReservedName(IdealDBError, ValueError):
    pass


class ArityMismatch(IdealDBError, ValueError):
    pass


class HeaderMismatch(IdealDBError, ValueError):
    pass


class NameCollision(IdealDBError, ValueError):
    pass


class DegreeGuardExceeded(IdealDBError):
    pass


class NotZeroDimensional(IdealDBError):
    pass


class IrrationalPoint(IdealDBError):
    pass


class CandidateExplosion(IdealDBError):
    pass


class DependentBasis(IdealDBError, ValueError):
    pass


class BasisSizeError(IdealDBError, ValueError):
    pass


class NonRadical(IdealDBError):
    pass


class PartitionInvalid(IdealDBError, ValueError):
    pass


class ParseError(IdealDBError, ValueError):
    """Syntax error with a 1-based source position."""

    def __init__(self, line, column, expected, found=None):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        msg = f"line {line}, column {column}: expected {expected}"
        if found is not None:
            msg += f", found {found!r}"
        super().__init__(msg)

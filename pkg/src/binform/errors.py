"""Exception hierarchy shared by all modules."""


class BinformError(Exception):
    """Base class for library errors."""


class ContextMismatchError(BinformError, ValueError):
    """Operands live in different fields or on different curves."""


class NotOnCurveError(BinformError, ValueError):
    """A point (or Kummer pair) does not satisfy the equations of its curve."""


class SingularCurveError(BinformError, ValueError):
    """The curve parameter makes the model singular."""


class SupersingularError(SingularCurveError):
    """j = 0: no curve in either normal form has this invariant."""


class ExceptionalInputError(BinformError, ArithmeticError):
    """A fast straight-line formula vanished identically on its input."""


class UnsupportedBaseError(BinformError, ValueError):
    """A Kummer-oriented curve was requested for a 2-torsion base point."""


class EncodingError(BinformError, ValueError):
    """Malformed text encoding of a field element, point or vector file."""

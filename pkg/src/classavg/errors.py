"""Exception hierarchy shared by every module."""


class ClassAvgError(ValueError):
    """Base class for all errors raised by this package."""


class VariableCountMismatch(ClassAvgError):
    pass


class ZeroAtNegativeExponent(ClassAvgError, ZeroDivisionError):
    pass


class NonSquare(ClassAvgError):
    pass


class BadRowSet(ClassAvgError):
    pass


class DoesNotFitBox(ClassAvgError):
    pass


class RepeatedPoint(ClassAvgError, ZeroDivisionError):
    pass


class NotSymmetric(ClassAvgError):
    pass


class PreconditionViolated(ClassAvgError):
    pass


class SingularPoint(ClassAvgError, ZeroDivisionError):
    pass


class LabelTooLong(ClassAvgError):
    pass


class SingularParameters(ClassAvgError, ZeroDivisionError):
    pass


class UnsupportedGroup(ClassAvgError):
    pass


class TooLarge(ClassAvgError):
    pass

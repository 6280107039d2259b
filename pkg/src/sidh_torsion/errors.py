"""Exception types raised across the package."""


class TorsionError(Exception):
    """Base class for all package errors."""


class FactoringTimeout(TorsionError):
    pass


class NotPrimitive(TorsionError):
    pass


class TorsionUnavailable(TorsionError):
    pass


class BadKernelOrder(TorsionError):
    pass


class NotInSpan(TorsionError):
    pass


class WrongCurve(TorsionError):
    pass


class NotFound(TorsionError):
    pass


class BudgetExhausted(TorsionError):
    pass


class NoCandidateSurvives(TorsionError):
    pass


class EffortExhausted(TorsionError):
    pass


class SaturationStuck(TorsionError):
    pass


class Obstruction(TorsionError):
    pass


class NotSmooth(TorsionError):
    pass


class NoPrimeFound(TorsionError):
    pass


class InvalidInstance(TorsionError):
    pass

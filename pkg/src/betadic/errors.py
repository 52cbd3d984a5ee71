"""Exception hierarchy.

Every mathematical precondition failure derives from :class:`MathError`,
which the command line maps to exit code 2.  The ``name`` attribute is the
stable identifier written into JSON diagnostics.
"""


class MathError(ValueError):
    """Base class for precondition failures of a computation."""

    @property
    def name(self):
        return type(self).__name__


class NotMonic(MathError):
    pass


class Reducible(MathError):
    def __init__(self, msg, factor=None):
        super().__init__(msg)
        self.factor = factor


class RingMismatch(MathError):
    pass


class ZeroElement(MathError):
    pass


class NotDivisible(MathError):
    pass


class NotPrime(MathError):
    pass


class NonMonogenicPrime(MathError):
    pass


class UnitOrZero(MathError):
    pass


class NotAUnit(MathError):
    pass


class NotPrincipalUnit(MathError):
    pass


class PrecisionExhausted(MathError):
    pass


class FactoringFailed(MathError):
    pass


class RootOfUnity(MathError):
    def __init__(self, msg, order=None):
        super().__init__(msg)
        self.order = order


class PatternNotFound(MathError):
    def __init__(self, msg, kernels=None):
        super().__init__(msg)
        self.kernels = kernels or []


class NormTooSmall(MathError):
    pass


class IncompleteDigitSet(MathError):
    pass


class NotCoprime(MathError):
    pass


class WorkBudgetExceeded(MathError):
    def __init__(self, msg, h_m=None):
        super().__init__(msg)
        self.h_m = h_m


class RecursionInvalid(MathError):
    pass


class BadDigit(MathError):
    pass

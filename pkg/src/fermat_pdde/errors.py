"""Exception and warning types shared across the package."""


class PddeError(Exception):
    """Base class for all errors raised by fermat_pdde."""


class DimensionMismatch(PddeError, ValueError):
    pass


class IndexOutOfRange(PddeError, IndexError):
    pass


class ResourceLimit(PddeError):
    pass


class ZeroFunction(PddeError, ValueError):
    """Raised when an operation is undefined on the zero function."""


class NotIntegrableInClass(PddeError):
    """The antiderivative leaves the exponential-polynomial class."""


class NotInKernel(PddeError, ValueError):
    """A periodic direction t does not satisfy t . c = 0."""


# equation construction
class ZeroCoefficient(PddeError, ValueError):
    pass


class ZeroShift(PddeError, ValueError):
    pass


class IndexOrder(PddeError, ValueError):
    pass


class ConstantRHS(PddeError, ValueError):
    pass


# theorem constructors
class CaseMismatch(PddeError, ValueError):
    pass


class ZeroBetaMu(PddeError, ValueError):
    pass


class DegenerateDenominator(PddeError, ZeroDivisionError):
    pass


# solver
class ZeroTarget(PddeError, ValueError):
    pass


class ZeroWeight(PddeError, ValueError):
    pass


class NoRootFound(UserWarning):
    """Newton search finished without a converged root (empty result)."""


class ExponentOverflowWarning(RuntimeWarning):
    """An exponent's real part exceeded the double-precision safe range."""


# parsing / scenarios
class ExpressionSyntaxError(PddeError, SyntaxError):
    def __init__(self, message, position=None, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if position is not None:
            detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)


class NotInClass(PddeError, ValueError):
    """Expression is outside the exponential-polynomial class."""


class ScenarioError(PddeError, ValueError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")

"""Exception types shared across the package."""


class JordanSandwichError(Exception):
    """Base class for every error raised by this package."""


class NonSplit(JordanSandwichError):
    """A polynomial does not factor into linear factors over the working field."""


class InfeasibleE(JordanSandwichError, ValueError):
    """Requested subspace dimension lies outside ``0..n``."""


class FieldTooSmall(JordanSandwichError, ValueError):
    pass


class TypeMismatch(JordanSandwichError):
    """A witness fiber did not have its declared Jordan type."""

    def __init__(self, message, assignment=None):
        super().__init__(message)
        self.assignment = assignment


class NotPolynomial(JordanSandwichError):
    """Point counts were not reproduced by the interpolating polynomial."""


class InsufficientSamples(JordanSandwichError, ValueError):
    pass


class GuardrailExceeded(JordanSandwichError):
    """An enumeration would exceed the configured size limit."""


class CounterexampleFound(JordanSandwichError):
    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance

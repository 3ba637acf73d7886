"""Exception types shared across the package."""


class MalformedInput(ValueError):
    """Input text or arguments that cannot describe a valid object."""


class UnsupportedMethod(ValueError):
    """A computation route was requested outside the range where it is valid."""


class NumericError(ArithmeticError):
    """Floating point stage produced non-finite or out-of-range values."""

    def __init__(self, message, iteration=None):
        super().__init__(message)
        self.iteration = iteration

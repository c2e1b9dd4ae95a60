"""Exception types shared across the package."""


class TomographyError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(TomographyError):
    """An argument violates a documented precondition."""


class NumericalFailureError(TomographyError):
    """An iterative numerical routine failed to converge."""


class DegenerateParametersError(TomographyError):
    """Cholesky parameter vector is (numerically) all zero, so no density
    matrix is defined."""


class OutputError(TomographyError):
    """Persisting results to disk failed.

    When raised by the sweep harness, the computed records are attached as
    the ``records`` attribute so callers can still recover them.
    """

    def __init__(self, message, records=None):
        super().__init__(message)
        self.records = records


class InputDataError(TomographyError):
    """A results file could not be parsed.

    ``line`` carries the 1-based offending line number when known.
    """

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line

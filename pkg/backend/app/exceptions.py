"""Error hierarchy shared by the algebra services and the CLI."""

from typing import Any, Optional, Tuple


class GtaError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(GtaError, ValueError):
    """Command input the tool refuses: an unknown mode or scope, or a computation above its size gate."""


class NotAParameterTuple(InvalidInput):
    """Raised when (N, a1, a2, b1, b2) does not define a generalised Taft algebra."""

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(f"{condition}: {message}")


class ParameterMismatch(GtaError, ValueError):
    """Elements of different algebras (or different doubles) were combined."""


class OrderMismatch(GtaError, ValueError):
    """Cyclotomic scalars of different order were combined."""


class InternalDisagreement(GtaError, RuntimeError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        self.witness = witness
        super().__init__(message)


class ClassifierDisagreement(InternalDisagreement):
    """The 2-adic classifier and the brute-force oracle disagree on a tuple."""

    def __init__(self, counterexample: Tuple[int, int, int, int, int], report: Any = None):
        self.counterexample = counterexample
        self.report = report
        super().__init__(f"classifier and oracle disagree on {counterexample}", witness=counterexample)

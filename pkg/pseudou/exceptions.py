class PseudoUError(Exception):
    """Base class for all exceptions raised by pseudou.

    Args:
        message (str): The exception message.
    """

    exit_code = 1
    """int: The process exit code the CLI reports for this error."""

    def __init__(self, message):
        super(PseudoUError, self).__init__(message)
        self.message = message

    def __str__(self):
        return f"[{self.exit_code}]: {self.message}"


class PreconditionError(PseudoUError):
    """Raised when preconditions for an operation are not met"""

    exit_code = 2


class PostconditionError(PseudoUError):
    """Raised when postconditions for an operation are not met"""

    exit_code = 3


class InputError(PreconditionError):
    """Malformed JSON or YAML input.

    Args:
        message (str): The exception message.
        position (Optional[int]): Character offset of the problem, if known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at char {position})"
        super(InputError, self).__init__(message)
        self.position = position


class OrderMismatchError(PreconditionError):
    """Cyclotomic numbers from different rings were combined."""


class DomainError(PreconditionError):
    """An argument lies outside the domain of the operation."""


class DimensionMismatchError(PreconditionError):
    """Matrix and form dimensions disagree."""


class MembershipError(PreconditionError):
    """A matrix is not in the group the operation requires."""


class NotSemisimpleError(PreconditionError):
    """A defective eigenvalue was detected by the rank test."""


class NotSpecialError(PreconditionError):
    """The determinant of the factor product is not 1."""


class SamplingError(PreconditionError):
    """Consecutive path samples are too far apart to lift the phase."""


class DegenerateFormError(PreconditionError):
    """A Hermitian form that must be non-degenerate is degenerate."""


class ConditioningError(PostconditionError):
    """Numerical data too ill-conditioned to classify within tolerance."""


class DecompositionError(PostconditionError):
    """A Cartan or polar factor failed its structural check."""


class FactorizationError(PostconditionError):
    """A commutator pipeline stage broke down.

    Args:
        stage (str): Name of the failing stage.
        message (str): The exception message.
    """

    def __init__(self, stage, message):
        super(FactorizationError, self).__init__(f"{stage}: {message}")
        self.stage = stage


class ConsistencyError(PostconditionError):
    """Two independent computations of the same quantity disagree."""

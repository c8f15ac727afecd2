"""Exception hierarchy. ``exit_code`` is the CLI process status for each class."""


class BellSymError(Exception):
    exit_code = 1


class ParseError(BellSymError):
    exit_code = 2


class ValidationError(BellSymError):
    """The matrix is not a physical density matrix."""

    exit_code = 3


class NotHermitian(ValidationError):
    pass


class TraceNotOne(ValidationError):
    pass


class NotPositive(ValidationError):
    pass


class NotPSD(ValidationError):
    pass


class InfeasibleEpsilon(BellSymError):
    exit_code = 4


class NoSolution(BellSymError):
    exit_code = 4


class UnknownKind(BellSymError):
    exit_code = 5

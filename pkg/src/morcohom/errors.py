"""Exception hierarchy; each class maps to one CLI exit code."""


class MorcohomError(Exception):
    exit_code = 1


class InputError(MorcohomError, ValueError):
    """Malformed or out-of-range input (schema errors, bad parameters)."""

    exit_code = 2


class InconsistentDataError(MorcohomError):
    """Input that is well formed but mathematically inconsistent."""

    exit_code = 3


class NotAcyclicError(InconsistentDataError):
    pass


class InconclusiveError(MorcohomError):
    """The requested quantity is not determined by the available data."""

    exit_code = 4

    def __init__(self, message: str, warnings: list | None = None):
        super().__init__(message)
        self.warnings = list(warnings or [])


class OracleTooLarge(MorcohomError):
    """An oracle instance exceeds its configured size cap."""

    exit_code = 4

"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: usage errors exit 2, input/parse
errors exit 3, model validation errors exit 4.
"""


class CohomotopyError(Exception):
    """Base class for all package errors."""


class UsageError(CohomotopyError):
    """An operation was called outside its contract (bad degree, wrong
    dimensions, missing bound, ...)."""


class InputError(CohomotopyError):
    """A facet file or model file could not be read or parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ModelValidationError(CohomotopyError):
    """An algebraic model file violated a structural rule.

    Carries the name of the violated rule and the location (JSON path)
    of the offending data.
    """

    def __init__(self, rule, location, message):
        super().__init__(f"[{rule}] at {location}: {message}")
        self.rule = rule
        self.location = location


class InternalConsistencyError(CohomotopyError):
    """An identity that is guaranteed by exactness failed; this indicates
    an invalid model rather than a user mistake."""

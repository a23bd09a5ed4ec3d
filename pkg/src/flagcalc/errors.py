"""Exception hierarchy shared by the library and the command line."""


class FlagcalcError(Exception):
    """Base class for all errors raised by flagcalc."""

    exit_code = 1


class ValidationError(FlagcalcError, ValueError):
    """Malformed input or a violated precondition."""

    exit_code = 2


class BudgetExceeded(FlagcalcError):
    """An enumeration would exceed the configured tuple budget."""

    exit_code = 3

    def __init__(self, projected: int, budget: int):
        self.projected = projected
        self.budget = budget
        super().__init__(
            f"enumeration of {projected} tuples exceeds budget {budget}"
        )


class InvariantViolation(FlagcalcError, AssertionError):
    """An internal consistency check failed; always indicates a bug."""

    exit_code = 4

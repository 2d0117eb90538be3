"""Exception hierarchy shared by all modules.

Every error carries a short machine-readable ``code``; the CLI maps the three
families below onto distinct exit codes.
"""


class PermcoverError(Exception):
    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        return {"code": self.code, "message": str(self), "details": self.details}


class InputError(PermcoverError):
    """Malformed or mathematically unsuitable input."""

    code = "input"


class NotPseudomanifoldError(InputError):
    code = "not_pseudomanifold"


class NotStronglyConnectedError(InputError):
    code = "not_strongly_connected"


class OrientationError(InputError):
    code = "orientation_incoherent"


class ColoringError(InputError):
    code = "not_regular"


class BudgetExceeded(PermcoverError):
    code = "budget"


class WordBudgetExceeded(BudgetExceeded):
    code = "budget_word_length"


class ClosureBudgetExceeded(BudgetExceeded):
    code = "budget_closure"


class StateBudgetExceeded(BudgetExceeded):
    code = "budget_states"


class TimeBudgetExceeded(BudgetExceeded):
    code = "budget_time"


class VerificationError(PermcoverError):
    """A structural claim about a constructed complex does not hold."""

    code = "verification"

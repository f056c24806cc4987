"""Exception types shared across the package.

Plain ValueError is used for malformed arguments (wrong sign, wrong
length, precondition violations); the classes below mark conditions a
caller may want to handle differently: bad input *data*, evaluation
outside a function's numeric domain, and blown resource/evaluation
budgets.
"""


class DataError(ValueError):
    """Input data (a zeros file, a config file) is malformed."""


class DomainError(ValueError):
    """Numeric arguments lie outside the domain an operation supports."""


class ResourceError(RuntimeError):
    """A certified tolerance would need more terms/memory than allowed.

    The message names the limit that would be required.
    """


class BudgetError(RuntimeError):
    """An evaluation budget was exceeded.

    ``best`` carries the best estimate obtained so far, when one exists.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best

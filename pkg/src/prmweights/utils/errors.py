"""
Exception hierarchy shared by every prmweights module.
The CLI maps these onto exit codes (see cli.main).
"""


class PRMError(Exception):
    """Base class for all prmweights errors."""


class FieldError(PRMError, ValueError):
    """Invalid field construction or arithmetic (composite p, reducible modulus, 0^-1, mixed fields)."""


class DomainError(PRMError, ValueError):
    """A precondition on ranks, degrees or sizes was violated."""


class FormulaMismatchError(PRMError, AssertionError):
    """Two independent evaluations of the same identity disagree."""

    def __init__(self, message: str, **witness):
        super().__init__(message)
        self.witness = witness


class ConstructionError(PRMError):
    """A builder could not produce the claimed object (bad roots, dimension shortfall)."""


class BudgetExceededError(PRMError):
    """An exhaustive run would exceed its visit or point budget."""

    def __init__(self, message: str, required: int = 0, budget: int = 0):
        super().__init__(message)
        self.required = required
        self.budget = budget


class SearchError(PRMError):
    """A bounded randomized routine gave up."""

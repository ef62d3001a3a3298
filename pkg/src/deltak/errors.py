"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: InputError -> 2,
ContractViolation -> 1, ResourceBudgetExceeded -> 3.
"""


class DeltakError(Exception):
    pass


class InputError(DeltakError, ValueError):
    pass


class InvalidDeltaMatroid(InputError):
    def __init__(self, message, violating_edge=None):
        super().__init__(message)
        self.violating_edge = violating_edge


class ContractViolation(DeltakError):
    """A mathematical identity the package guarantees failed to hold."""


class DegreeBoundError(ContractViolation):
    pass


class ResourceBudgetExceeded(DeltakError):
    pass


class GenericDirectionError(DeltakError):
    """A direction vector paired to zero with some character; retry."""

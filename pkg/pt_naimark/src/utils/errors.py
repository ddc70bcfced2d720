class PTNaimarkError(Exception):
    """Base class for errors raised by pt_naimark."""


class ParameterDomainError(PTNaimarkError, ValueError):
    """Parameters fall outside the admitted (unbroken PT) domain."""


class ContractViolation(PTNaimarkError, ValueError):
    """A caller broke the precondition of an operation."""


class InvariantViolation(PTNaimarkError, RuntimeError):
    """An identity checked at construction failed, which means a bug."""

    def __init__(self, name: str, error: float, tolerance: float):
        self.name = name
        self.error = error
        self.tolerance = tolerance
        super().__init__(
            f'Invariant {name} violated: max error {error:.3e} > tolerance {tolerance:.3e}'
        )

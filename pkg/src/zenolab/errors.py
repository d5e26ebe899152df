"""Shared exception and warning types.

Domain errors are precondition violations (bad parameters, out-of-range
indices).  Numerical errors are failures of an otherwise valid computation
(singular systems, unusable conditioning).  The CLI maps these to distinct
exit codes.
"""


class DomainError(ValueError):
    """A precondition on the inputs was violated."""


class NumericalError(ArithmeticError):
    """A numerical procedure failed (singular or unusable system)."""


class UnderflowWarning(RuntimeWarning):
    """A probability underflowed to zero and was returned as exactly 0."""


class SaturationWarning(RuntimeWarning):
    """An unbounded weight overflowed and was returned as +inf."""


class IllConditionedWarning(RuntimeWarning):
    """A linear system was solved but its condition estimate is unreliable."""

"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the supported domain (r/s > 1, coprime, positive)."""


class ContainmentError(ValueError):
    """A partition interval [mu, lam] with mu not contained in lam, or a box overflow."""


class BudgetError(ValueError):
    """A brute-force enumeration would exceed its declared budget."""


class ConsistencyError(ArithmeticError):
    """An internal identity failed; indicates an implementation bug."""

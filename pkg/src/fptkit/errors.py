"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is syntactically fine but outside an operation's domain.

    The CLI maps this to exit code 1; malformed syntax is argparse's
    business and exits 2.
    """


class OracleBudgetError(DomainError):
    """A Frobenius-oracle call would exceed its work budget."""

    def __init__(self, message, *, q=None, estimate=None, limit=None):
        super().__init__(message)
        self.q = q
        self.estimate = estimate
        self.limit = limit

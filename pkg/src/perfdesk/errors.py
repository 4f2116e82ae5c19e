"""Error kinds shared across the package."""


class UsageError(Exception):
    """Mismatched shapes, levels or primes between operands, or bad CLI input."""


class DomainError(ValueError):
    """A precondition on mathematical input is violated."""


class PrecisionError(Exception):
    """A result is indeterminate at the available truncation."""


class InversionError(Exception):
    """Leading coefficient is not invertible in the coefficient ring."""


class RangeError(Exception):
    """A series bound fails to converge on the requested evaluation range."""


class ConsistencyError(Exception):
    """An internal exactness check failed; must never fire on valid builds."""

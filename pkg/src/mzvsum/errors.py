"""Exception types shared across the package."""


class NotRationalError(ValueError):
    """A cyclotomic value expected to be rational has nonzero non-constant coordinates.

    Closed-form evaluations always end on the real rational line; seeing this
    error means a formula was implemented wrong, not that the input was bad.
    """


class UnsupportedError(ValueError):
    """No exact evaluation route exists for the request (e.g. odd zeta values)."""


class InvalidQueryError(ValueError):
    """Structurally invalid query, such as depth k exceeding n or a method/m mismatch."""


class DivergentError(ValueError):
    """Numerical evaluation of a series that does not converge."""


class OrderMismatchError(ValueError):
    """Arithmetic between cyclotomic values of different orders; embed first."""


class GradeMismatchError(ValueError):
    """Addition of pi-graded values with different exponents of pi."""


class ConsistencyError(RuntimeError):
    """Two evaluation routes that must agree produced different values."""


class EnumerationLimitError(ValueError):
    """Requested enumeration exceeds the complexity guard (10^7 terms)."""

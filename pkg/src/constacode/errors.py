"""Typed errors raised across the package.

Everything derives from :class:`ConstacodeError` so callers (notably the
CLI) can distinguish algebra failures from ordinary Python errors and
report them by class name.
"""


class ConstacodeError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(ConstacodeError):
    """The requested field characteristic is not a prime number."""


class MissingModulus(ConstacodeError):
    """An extension field (m > 1) was requested without a modulus."""


class ReducibleModulus(ConstacodeError):
    """The supplied extension modulus is not irreducible over F_p."""


class FieldMismatch(ConstacodeError):
    """Arithmetic attempted between elements of different field contexts."""


class ZeroElement(ConstacodeError):
    """A nonzero field element was required (order, inverse, twist)."""


class CongruenceFailed(ConstacodeError):
    """q is not congruent to 1 modulo r*l, so no suitable root of unity exists."""


class DivisionByZeroPoly(ConstacodeError):
    """Polynomial division by the zero polynomial."""


class ZeroPolynomial(ConstacodeError):
    """A nonzero polynomial was required."""


class ZeroConstant(ConstacodeError):
    """The constant term of a binomial x^n - c must be nonzero."""


class IndexOutOfRange(ConstacodeError):
    """An idempotent index outside its valid range."""


class InternalDisagreement(ConstacodeError):
    """Two independent computations of the same quantity differ.

    This always signals an implementation bug and aborts the construction.
    """


class BetaNotPlusMinusOne(ConstacodeError):
    """The operation requires the column twist to be 1 or -1."""


class AlphaNotPlusMinusOne(ConstacodeError):
    """The operation requires the row twist to be 1 or -1."""


class MismatchedSystem(ConstacodeError):
    """An idempotent system does not match the code parameters it is used with."""


class ZeroAlphaBeta(ConstacodeError):
    """Constacyclic twists must be nonzero."""


class PreconditionUnmet(ConstacodeError):
    """A screening test was invoked outside its stated hypotheses."""


class DivisorCheckFailed(ConstacodeError):
    """A declared divisor does not divide x^s - alpha (or is not monic)."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class BudgetExceeded(ConstacodeError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration of {required} items exceeds the budget of {budget}; "
            f"raise the budget to proceed"
        )
        self.required = required
        self.budget = budget


class SpecFileError(ConstacodeError):
    """A code description file could not be parsed."""

    def __init__(self, line: int | None, message: str):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line

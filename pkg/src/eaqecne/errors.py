"""Exception hierarchy shared by all modules.

Everything raised on bad domain input derives from ``EaqecneError`` so the
CLI can map it to exit code 1; usage errors are argparse's business (exit 2).
"""


class EaqecneError(Exception):
    """Base class for all domain errors raised by this package."""


class FieldMismatch(EaqecneError):
    """Operands belong to different field specs."""


class DivisionByZero(EaqecneError, ZeroDivisionError):
    """Division by the zero element of a finite field."""


class NotQuadraticExtension(EaqecneError):
    """Operation requires a field built as a quadratic extension."""


class DimensionMismatch(EaqecneError):
    """Vector or matrix dimensions are incompatible."""


class AmbientMismatch(EaqecneError):
    """Subspaces live in different ambient spaces."""


class FormatError(EaqecneError):
    """Malformed matrix or code file."""


class IndexOutOfRange(EaqecneError):
    """Coordinate index outside the code length."""


class BudgetExceeded(EaqecneError):
    """Enumeration would exceed the configured word budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} words, budget is {budget}")
        self.required = required
        self.budget = budget


class NotSelfOrthogonal(EaqecneError):
    """Code is not self-orthogonal under the required form."""


class ParityViolation(EaqecneError):
    """Radical co-dimension inside the code came out odd."""


class InsufficientProtection(EaqecneError):
    """Bob's code has too few logical qudits to cover the ebits."""


class PreconditionFailed(EaqecneError):
    """A named precondition of a construction was violated."""


class RangeError(EaqecneError):
    """Numeric argument outside its documented range."""


class DimensionCap(EaqecneError):
    """Requested dense-matrix dimension exceeds the configured cap."""


class NonPauliResult(EaqecneError):
    """Matrix computation failed to resolve to a Pauli-group relation."""


class NotAbelian(EaqecneError):
    """Generator set does not commute pairwise."""


class PhaseObstruction(EaqecneError):
    """Generated group contains a nontrivial multiple of the identity."""

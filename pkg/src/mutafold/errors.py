"""Exception hierarchy for mutafold.

Domain rejections (invalid inputs, impossible requests) all derive from
MutafoldError so callers can map them to exit codes / HTTP statuses in one
place.
"""


class MutafoldError(Exception):
    """Base class for all mutafold domain errors."""


class ValidationError(MutafoldError):
    """Input fails a structural invariant."""


class NotSignSkewSymmetric(ValidationError):
    """b_ij and b_ji have the same nonzero sign, or exactly one vanishes."""


class NotSkewSymmetrizable(ValidationError):
    """No positive integer diagonal D makes BD skew-symmetric."""


class NotRealizable(ValidationError):
    """Diagram violates the perfect-square condition on chordless cycles."""


class IndexOutOfRange(MutafoldError):
    """Vertex index outside 1..n."""


class EntryOverflow(MutafoldError):
    """A matrix entry left the signed 64-bit range during a computation."""


class BudgetExhausted(MutafoldError):
    """An enumeration hit its node budget before reaching a verdict."""

    def __init__(self, message, explored=None):
        super().__init__(message)
        self.explored = explored


class NotMutationFinite(MutafoldError):
    """Operation requires a mutation-finite input."""


class OrderTooSmall(MutafoldError):
    """Submatrix criterion needs order at least 10."""


class PartitionMismatch(MutafoldError):
    """Index partition sizes do not sum to the cover order."""


class IllDefinedComposite(MutafoldError):
    """Composite mutation attempted while E_i has internal edges."""


class InfiniteBaseClass(MutafoldError):
    """Exhaustive verification requested for a mutation-infinite base."""


class NotWeightOne(MutafoldError):
    """Local unfolding requested for a weight-2 decomposition."""


class NotWeightTwo(MutafoldError):
    """Non-local construction requested for a weight-1 decomposition."""


class UnsupportedIrregularCase(MutafoldError):
    """Irregular block outside the constructed weight-2 case."""


class InconsistentWeights(MutafoldError):
    """Outlet symmetrizer entries disagree; decomposition is invalid."""


class UnknownBlockMatrix(MutafoldError):
    """Induced block submatrix matches no catalogued matrix option."""


class ParseError(MutafoldError):
    """Malformed input text."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line

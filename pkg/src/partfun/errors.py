"""Exception types shared across the package.

Every domain error raised by the library is a subclass of PartfunError, so
callers (and the CLI) can distinguish bad input from genuine bugs.
"""


class PartfunError(Exception):
    pass


class BadParameter(PartfunError):
    """A numeric or structural argument is outside its documented range."""


class DuplicateNode(PartfunError):
    """Interpolation nodes must be pairwise distinct."""


class BadPartition(PartfunError):
    """Blocks do not form a partition of the vertex set."""


class LabelMismatch(PartfunError):
    """Two labeled graphs with different label arities cannot be glued."""


class DimensionMismatch(PartfunError):
    """Matrix dimension does not match spins, weights or companion objects."""


class PinningConflict(PartfunError):
    """A configuration does not extend the given pinning."""


class BudgetExceeded(PartfunError):
    """Brute-force enumeration would exceed the configured budget."""


class AsymmetricTensor(PartfunError):
    """Hypergraph weight tensors must be symmetric under index permutation."""


class ArityMismatch(PartfunError):
    """Tensor arity differs from the hypergraph's uniformity."""


class NotSymmetric(PartfunError):
    """The operation is only defined for symmetric matrices."""


class NegativeEntries(PartfunError):
    """A non-negative matrix was required."""


class ParallelEdges(PartfunError):
    """The structural 0-1 classifier accepts loops but not parallel edges."""


class NotTractable(PartfunError):
    """The fast evaluator only runs on matrices classified tractable."""


class FactorizationFailure(PartfunError):
    """Internal consistency error: a rank-1 block failed to factor exactly."""


class TooLarge(PartfunError):
    """Enumeration guard (Bell numbers, labeled-graph bases) was exceeded."""


class RingUnsupported(PartfunError):
    """The operation does not support this coefficient ring."""


class NotSimple(PartfunError):
    """Flows are only defined on simple graphs."""


class UnsupportedModulus(PartfunError):
    """Prime transforms accept integer primes, or X for polynomial matrices."""


class NotPowerMatrix(PartfunError):
    """Renaming requires every nonzero entry to be a power of X."""


class OracleFailure(PartfunError):
    """An evaluation oracle returned a value outside its contract."""


class DegeneratePoint(PartfunError):
    """No usable evaluation point was found (should be unreachable)."""


class FormatError(PartfunError):
    """A graph or matrix file could not be parsed."""

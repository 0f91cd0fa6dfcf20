"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`OptbError`;
the CLI maps these to exit code 1.  Most also derive from :class:`ValueError`
since they reject a bad argument.
"""


class OptbError(Exception):
    """Base class for domain errors."""


class WordSyntaxError(OptbError, ValueError):
    """A twist word does not match the word grammar."""


class SlopeError(OptbError, ValueError):
    """A surgery slope p/q is not a reduced fraction."""


class UnsupportedSlopeError(SlopeError):
    """The slope is valid but outside the range a formula covers (p <= 1)."""


class MonodromyTypeError(OptbError, ValueError):
    """Parameters violate the constraints of a monodromy type."""


class NotALensSpaceError(OptbError, ValueError):
    """L(m, n) with gcd(m, n) != 1, or m = n = 0."""


class HypothesisError(OptbError, ValueError):
    """The input falls outside the hypotheses of the decision procedure."""


class BoundExceededError(OptbError, ValueError):
    """An exhaustive search was asked to run beyond its bound."""


class ScanFileError(OptbError):
    """A scan records file is malformed or belongs to a different scan."""


class InternalConsistencyError(OptbError, AssertionError):
    """Two independent computations disagree.  Always a library bug."""

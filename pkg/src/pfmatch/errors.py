"""Exception types shared across the package.

One class per failure category so that callers (and the CLI exit-code
mapping) can distinguish them without string matching.
"""


class PfmatchError(Exception):
    """Base class for everything raised deliberately by this package."""


class InvalidSizeError(PfmatchError, ValueError):
    """A size parameter is outside its legal range (e.g. a 0-vertex path)."""


class NotATreeError(PfmatchError, ValueError):
    """A graph required to be a tree is disconnected or contains a cycle."""


class SizeLimitError(PfmatchError):
    """An exponential-time step was asked to run above its vertex guard."""


class InvalidCycleError(PfmatchError, ValueError):
    """A vertex sequence is not a simple cycle of the host graph."""


class OddCycleParityError(PfmatchError, ValueError):
    """Odd orientation is only defined for even-length cycles."""


class PreconditionError(PfmatchError):
    """An operation's mathematical precondition does not hold for the input."""


class NotAPerfectSquareError(PfmatchError, ArithmeticError):
    """Exact square root requested of a non-square integer."""


class NotPfaffianError(PfmatchError):
    """A determinant-based count exposed that the orientation was not Pfaffian."""


class NotSquarishError(PfmatchError, ArithmeticError):
    """An integer is neither a perfect square nor twice one."""


class NumericalConsistencyError(PfmatchError):
    """A floating-point evaluation strayed too far from the exact value."""


class EdgeListParseError(PfmatchError, ValueError):
    """Malformed edge-list text (bad header, bad line, index out of range)."""

"""Exception hierarchy shared by every module."""


class LatticeError(Exception):
    """Base class for all errors raised by latticeiso."""


class EmptySetError(LatticeError, ValueError):
    """An operation that needs a nonempty vertex set received the empty set."""


class CoordinateRangeError(LatticeError, ValueError):
    """A coordinate exceeds the supported magnitude (2**30)."""


class EmptyBoxError(LatticeError, ValueError):
    """No lattice point satisfies the band constraints of a box."""


class InvalidSizeError(LatticeError, ValueError):
    """A size argument is out of range (for instance n < 1)."""


class NoSuchBoundaryError(LatticeError, ValueError):
    """No minimal set has the requested boundary size."""


class NotMinimalError(LatticeError, ValueError):
    """A classifier defined only for minimal sets received a non-minimal set."""


class SizeTooLargeError(LatticeError, ValueError):
    """The brute-force oracle was asked for a size above its cap."""


class ConsistencyError(LatticeError, AssertionError):
    """Two routes that must agree gave different answers. Always a bug."""


class HypothesisFailed(LatticeError, ValueError):
    """The finite-component criterion does not apply to a box.

    ``which`` lists every failed hypothesis, in the fixed order
    ``excess``, ``modulus``, ``standard_lines``, ``dead``.
    """

    def __init__(self, which):
        self.which = tuple(which)
        super().__init__("hypotheses failed: " + ", ".join(self.which))


class SetFileError(LatticeError, ValueError):
    """A set file is malformed: bad JSON, wrong shape, or duplicate vertices."""

"""Exception types shared across the package.

Everything raised on purpose derives from LatticeError so callers (and the
CLI) can map domain failures to diagnostics without catching bare Exception.
"""

from __future__ import annotations


class LatticeError(Exception):
    """Base class for all domain errors raised by this package."""


class OutOfBounds(LatticeError):
    """A vertex, edge, or move region leaves the bounded lattice."""


class NotTwoValent(LatticeError):
    """An edge set has a vertex of degree other than 2."""

    def __init__(self, vertex, degree):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 2")
        self.vertex = vertex
        self.degree = degree


class EmptyGraph(LatticeError):
    """The empty edge set is not a lattice knot."""


class InvalidBound(LatticeError):
    """Requested bound would shrink the lattice."""


class DuplicateEdge(LatticeError):
    """An edge appeared twice in a serialized knot."""


class CapExceeded(LatticeError):
    """Basis enumeration grew past the configured cap."""

    def __init__(self, count_so_far):
        super().__init__(f"enumeration exceeded cap ({count_so_far} found so far)")
        self.count_so_far = count_so_far


class LimitExceeded(LatticeError):
    """Orbit search grew past the configured member limit."""

    def __init__(self, count_so_far):
        super().__init__(f"orbit exceeded limit ({count_so_far} members so far)")
        self.count_so_far = count_so_far


class UnknownKnot(LatticeError):
    """A knot is not an element of the basis it was used with."""


class NotTwoComponents(LatticeError):
    """Linking is defined only for two-component knots."""


class DegenerateGeometry(LatticeError):
    """Two segments from different components intersect; input is corrupt."""


class TooCoarse(LatticeError):
    """A preferred-vertex approximation failed 2-valence at this order."""


class UnsupportedVariant(LatticeError):
    """No textual refinement formula covers this generator variant."""


class ScriptSyntaxError(LatticeError):
    """A knot file, move script, or curve file failed to parse."""

    def __init__(self, message, line=None, col=None):
        loc = "" if line is None else f" at line {line}" + ("" if col is None else f", col {col}")
        super().__init__(message + loc)
        self.line = line
        self.col = col

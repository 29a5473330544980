"""Exception hierarchy.

``InputError`` subclasses are user-facing (bad ladders, bad weights,
bad flags) and map to CLI exit code 1.  ``InternalError`` marks broken
internal invariants and maps to exit code 2; reaching one is a bug.
Every exception carries a short machine-readable ``code``.
"""

from __future__ import annotations


class CurveDistError(Exception):
    code = "ERROR"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InputError(CurveDistError):
    """Invalid user input (CLI exit code 1)."""

    code = "BAD_INPUT"


class InternalError(CurveDistError):
    """Violated internal invariant (CLI exit code 2)."""

    code = "INTERNAL"


class LadderError(InputError):
    """Malformed ladder rows (LENGTH_MISMATCH, BAD_MULTIPLICITY, EMPTY_INPUT)."""


class MultiCurveError(InputError):
    """Operation requires the vertical curve to be a single component."""

    code = "MULTI_CURVE"


class GenusTooSmallError(InputError):
    """Distance classification needs a pair filling genus at least 2."""

    code = "GENUS_TOO_SMALL"


class DisjointPairError(InputError):
    """Bigon reduction removed every intersection; the pair is disjoint."""

    code = "DISJOINT"


class CircuitLimitError(InputError):
    """Elementary-circuit enumeration exceeded the configured cap."""

    code = "CIRCUIT_LIMIT_EXCEEDED"


class TemplateError(InputError):
    """Malformed arc template or weights (UNBALANCED, NEGATIVE_WEIGHT, EMPTY)."""


class InfeasibleError(InputError):
    """Constraint system admits no weight vector."""

    code = "INFEASIBLE"


class ParityError(InternalError):
    """k - |F| came out odd; the face traversal is broken."""

    code = "PARITY"


class SideConflictError(InternalError):
    """Both candidate arcs at a crossing demanded the same side."""

    code = "SIDE_CONFLICT"

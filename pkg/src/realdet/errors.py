"""Exception hierarchy.

Every error carries ``invariant``, a short machine-readable name of the
violated condition, which the CLI reports verbatim.
"""

from __future__ import annotations


class RealDetError(ValueError):
    invariant = "invalid_input"

    def __init__(self, message: str, invariant: str | None = None):
        super().__init__(message)
        if invariant is not None:
            self.invariant = invariant


class LengthMismatch(RealDetError):
    invariant = "length_mismatch"


class NoSolution(RealDetError):
    invariant = "inconsistent_system"


class InvalidTopology(RealDetError):
    invariant = "topology"


class CurveMismatch(RealDetError):
    invariant = "same_curve"


class UnknownGenerator(RealDetError):
    invariant = "generator_name"


class NotRealSpin(RealDetError):
    invariant = "real_spin"


class BadW1Parity(RealDetError):
    invariant = "w1_parity"


class RankMismatch(RealDetError):
    invariant = "rank"


class BadParity(RealDetError):
    invariant = "degree_w1_parity"


class MissingBasepoint(RealDetError):
    invariant = "basepoint_required"


class BoundExceeded(RealDetError):
    invariant = "genus_bound"


class SchemaError(RealDetError):
    invariant = "schema"

"""Named error types shared across the package."""

from __future__ import annotations

__all__ = [
    "SyncqecError",
    "LengthMismatchError",
    "NotAGeneratorError",
    "DimensionTooLargeError",
    "DegenerateInputError",
    "NoPartnerError",
    "LemmaViolationError",
    "ConstructionInconsistencyError",
    "ClassicalLogicalIsGaugeError",
    "OperatorNotGaugeError",
    "SpecMismatchError",
]


class SyncqecError(Exception):
    """Base class for package errors."""


class LengthMismatchError(SyncqecError, ValueError):
    """Vector/operator lengths do not match."""


class NotAGeneratorError(SyncqecError, ValueError):
    """Polynomial does not divide x^n - 1."""


class DimensionTooLargeError(SyncqecError, ValueError):
    """Exhaustive enumeration bound exceeded."""


class DegenerateInputError(SyncqecError, ValueError):
    """Symplectic pairing input contains a vector orthogonal to all inputs."""


class NoPartnerError(SyncqecError, ValueError):
    """No anticommuting partner found during gauge pairing."""


class LemmaViolationError(SyncqecError, ValueError):
    """A lookup table required to be injective is not."""


class ConstructionInconsistencyError(SyncqecError, ValueError):
    """Two parameter formulas required to agree disagree."""


class ClassicalLogicalIsGaugeError(SyncqecError, ValueError):
    """Hybrid-subsystem empty-intersection precondition violated."""


class OperatorNotGaugeError(SyncqecError, ValueError):
    """Requested gauge-fixing target is not a gauge operator of the instance."""


class SpecMismatchError(SyncqecError, ValueError):
    """Code spec incompatible with the given cyclic code pair."""

"""Exception types shared across the package."""

from __future__ import annotations


class DimensionMismatchError(ValueError):
    """Operands live in different cyclotomic fields or Hilbert spaces."""


class InvalidDimensionError(ValueError):
    """A dimension argument is not a prime number."""


class DegenerateStateError(ValueError):
    """The zero vector was passed where a quantum state is required."""


class TheoremViolationError(RuntimeError):
    """An exactly verified structural fact failed.

    This should never fire on correct code: it marks a broken build (or a
    false claim), not bad user input.
    """

    def __init__(self, claim: str, witness: object = None):
        self.claim = claim
        self.witness = witness
        detail = f"{claim}" if witness is None else f"{claim}; witness: {witness!r}"
        super().__init__(detail)


class ClassificationError(TheoremViolationError):
    """The exhaustive qutrit classification produced an unexpected result."""


class ResumeError(RuntimeError):
    """A search checkpoint could not be read or does not match the run."""

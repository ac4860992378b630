"""Exception hierarchy.

Input problems derive from :class:`InvalidInput` (CLI exit code 2); failed
internal identities derive from :class:`CrossCheckError` (exit code 1).
"""


class BalgenusError(Exception):
    pass


class InvalidInput(BalgenusError, ValueError):
    pass


class NonPure(InvalidInput):
    pass


class RepeatedColorInFacet(InvalidInput):
    pass


class RepeatedVertex(InvalidInput):
    pass


class DuplicateFacet(InvalidInput):
    pass


class DanglingLabel(InvalidInput):
    pass


class ColorOutOfRange(InvalidInput):
    pass


class FaceNotPresent(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class InvalidHandle(InvalidInput):
    pass


class BadArity(InvalidInput):
    pass


class BadColors(InvalidInput):
    pass


class PreconditionFailed(InvalidInput):
    pass


class DimensionTooLow(InvalidInput):
    pass


class UnsupportedDimension(InvalidInput):
    pass


class Disconnected(InvalidInput):
    pass


class CrossCheckError(BalgenusError, AssertionError):
    """Two independent evaluations of the same quantity disagreed."""


class DehnSommervilleViolated(CrossCheckError):
    """The face numbers contradict the caller's manifold assertion."""

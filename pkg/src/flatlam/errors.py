"""Stable error types. CLI reports ``type(e).__name__`` verbatim."""


class FlatLamError(Exception):
    """Base for all domain errors."""


# surface validation
class InvalidPolygon(FlatLamError):
    pass


class GluingMismatch(FlatLamError):
    pass


class NonAdmissibleAngle(FlatLamError):
    pass


class EulerCharacteristic(FlatLamError):
    pass


class Disconnected(FlatLamError):
    pass


# developing / words
class InconsistentToken(FlatLamError):
    pass


class UnreducedWord(FlatLamError):
    pass


class TrivialClass(FlatLamError):
    pass


# laminations
class InterlacedLeaves(FlatLamError):
    pass


class NonPositiveWeight(FlatLamError):
    pass


class DuplicateLeaf(FlatLamError):
    pass


class NotTransverse(FlatLamError):
    pass


class HomotopyNotTransverse(FlatLamError):
    pass


# dual tree
class ChainTooSmall(FlatLamError):
    pass


# covers
class IntransitiveMonodromy(FlatLamError):
    pass


class FormatError(FlatLamError):
    """Malformed input file or word syntax (CLI exit 2)."""

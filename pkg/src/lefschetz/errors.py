"""Exception hierarchy shared by the engine and the command line."""


class LefschetzError(Exception):
    """Base class for all engine errors."""


class DimensionError(LefschetzError, ValueError):
    """Matrix shapes or coordinate lengths do not match."""


class SurfaceMismatch(LefschetzError, ValueError):
    """Two objects that must live on the same surface do not."""


class PreconditionError(LefschetzError, ValueError):
    """An operation was called outside its domain (bad index, doubling bound...)."""


class CertificateError(LefschetzError):
    """A homological certificate failed: the proposed move is not even
    homologically valid."""


class InvariantBreach(LefschetzError):
    """An internal consistency property was violated."""

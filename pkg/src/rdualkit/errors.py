"""Exception types raised across the toolkit."""


class RDualError(Exception):
    """Base class for every error this package raises on purpose."""


class NotHermitian(RDualError):
    pass


class NotPsd(RDualError):
    pass


class NoConvergence(RDualError):
    """An iterative sweep exceeded its iteration cap."""


class NotOrthonormal(RDualError):
    pass


class ZeroSequence(RDualError):
    """The operation needs rank >= 1 but the sequence spans nothing."""


class DimensionMismatch(RDualError):
    pass


class SingularAction(RDualError):
    """A subspace operator's action matrix is not invertible."""


class QTooLarge(RDualError):
    """norm(Q) exceeds sqrt(upper frame bound)."""


class QInverseTooLarge(RDualError):
    """norm(Q^-1) exceeds sqrt(1 / lower frame bound)."""


class QSingular(RDualError):
    pass


class RankMismatch(RDualError):
    pass


class BoundsMismatch(RDualError):
    pass


class CertificationFailed(RDualError):
    pass


class BadSpec(RDualError):
    """A generator request is inconsistent."""


class UsageError(RDualError):
    """Bad command line arguments."""


class ParseError(RDualError):
    """A sequence file is not valid JSON or not the expected schema."""


class ShapeError(RDualError):
    """A sequence file has inconsistent counts or entry shapes."""

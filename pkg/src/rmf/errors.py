"""Exception types shared across the package."""


class RmfError(Exception):
    """Base class for all package-specific errors."""


class PoleError(RmfError):
    """Evaluation of a rational function at a pole."""


class UnsupportedRankError(RmfError):
    """Rank parameter outside the valid range for the affine type."""


class UnsupportedTypeError(RmfError):
    """Operation not available for this affine type."""


class FusionAnchorError(RmfError):
    """Highest-weight anchor space of a fusion product is not 1-dimensional."""


class NonSchurError(RmfError):
    """Intertwiner solution space is not 1-dimensional."""


class UnexpectedFactorError(RmfError):
    """Denominator factor is not of the form z - zeta*q_s^m with zeta a 4th root of 1."""


class NonTelescopingError(RmfError):
    """Bracket ratio does not telescope to a finite product."""


class SolverError(RmfError):
    """Exact linear solve failed (inconsistent or under-determined system)."""

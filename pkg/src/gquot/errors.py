"""Exception types shared across the package.

Input problems (bad tables, malformed files, out-of-domain arguments) and
internal failures (numeric certification, theorem cross-checks) are kept
distinct so the CLI can map them to different exit codes.
"""


class GquotError(Exception):
    """Base class for all package errors."""


class ValidationError(GquotError):
    """A table or file failed structural validation."""


class SizeBoundError(GquotError):
    """An enumeration or numeric bound was exceeded."""


class NormalityError(GquotError):
    """A subgroup required to be normal is not."""


class ScaleError(GquotError):
    """Two root-of-unity scales could not be reconciled."""


class DomainError(GquotError):
    """An argument is outside the operation's mathematical domain."""


class CertificationError(GquotError):
    """A numeric result could not be certified within tolerance.

    Raised instead of ever returning a silently-rounded answer.
    """


class TheoremCheckError(GquotError):
    """Two independently computed sides of a theorem disagreed.

    This indicates an implementation bug, never new mathematics.
    """

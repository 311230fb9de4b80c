"""Exception types shared across the package."""


class GroupTestError(Exception):
    """Base class for domain errors raised by this package."""


class DegeneratePriorError(GroupTestError):
    """Prior vector admits no valid design (e.g. all zeros for CCW)."""


class CapacityError(GroupTestError):
    """Problem size exceeds a hard limit of an exact algorithm."""


class FileFormatError(GroupTestError):
    """A data file is malformed; message names the offending line/column."""


class CorrelationUndefinedError(GroupTestError):
    """Pearson correlation requested on data with zero variance."""

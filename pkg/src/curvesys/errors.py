"""Exception hierarchy shared by all curvesys modules."""


class CurveSysError(Exception):
    """Base class for every error raised by curvesys."""


class DimensionError(CurveSysError, ValueError):
    """Vectors or matrices of incompatible sizes were combined."""


class RankError(CurveSysError, ValueError):
    """Input vectors were expected to be linearly independent but are not."""


class StructureError(CurveSysError, ValueError):
    """Input violates a structural hypothesis (Gram matrix, family shape)."""


class FormatError(CurveSysError, ValueError):
    """A serialized curve system is malformed.

    ``location`` is a JSON-path style pointer such as ``$.curves[2].class``.
    """

    def __init__(self, message, location="$"):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.reason = message


class PreconditionError(CurveSysError, ValueError):
    """An operation was called outside its documented domain."""


class UnsupportedError(CurveSysError, NotImplementedError):
    """The requested parameters are valid but not handled (e.g. k != 1 bounds)."""

"""Exception types shared across the package."""


class PivotlabError(Exception):
    """Base class for all pivotlab errors."""


class LabelError(PivotlabError):
    """A point label does not exist in the set."""


class ShapeError(PivotlabError):
    """Input has the wrong length, count, or ordering."""


class DegenerateXError(PivotlabError):
    """All x values coincide; a y-on-x line fit is undefined."""


class DegenerateIntervalError(PivotlabError):
    """The two reference abscissae coincide; the interval map is undefined."""


class DegenerateTriangleError(PivotlabError):
    """Triangle vertices are collinear; barycentric coordinates are undefined."""


class DegenerateStateError(PivotlabError):
    """A scalar triple has repeated values where distinct ones are required."""


class FormatError(PivotlabError):
    """An input file could not be parsed."""


class UsageError(PivotlabError):
    """A command was invoked with unsupported options or data."""

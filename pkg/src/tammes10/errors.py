"""Exception types raised by the geometry, construction and solver code."""


class TammesError(ValueError):
    """Base class for every error raised by this package."""


class InvalidInputError(TammesError):
    """An input vector is not on the unit sphere (or is otherwise malformed)."""


class DegenerateAxisError(TammesError):
    """Two circle centers are parallel or antipodal, so the intersection is undefined."""


class InvalidRadiusError(TammesError):
    """A cap radius lies outside the window where the construction is defined."""


class ConstructionInfeasibleError(TammesError):
    """Two parent circles do not meet, so a center cannot be placed."""


class AmbiguousBranchError(TammesError):
    """Both intersection candidates score the same under the selection rule."""


class BracketError(TammesError):
    """The residual does not change sign over the requested bracket."""


class DocumentError(TammesError):
    """A configuration document cannot be parsed or fails its schema."""

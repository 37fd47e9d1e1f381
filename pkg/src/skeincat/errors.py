"""Exception types shared across the package."""


class SkeincatError(Exception):
    """Base class for all library errors."""


class SchemaError(SkeincatError):
    """Input JSON is structurally malformed: wrong shape, wrong types, unknown fields."""


class ValidationError(SkeincatError):
    """A structurally well-formed diagram violates an invariant.

    ``path`` points at the offending element, e.g. ``segments[3].ends[1]``.
    """

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class NonRealizable(SkeincatError):
    """Combinatorial data that no embedded curve system on the surface produces."""


class IllTypedWord(SkeincatError):
    """A generator word that does not type-check against the running strand count."""


class UnknownCrossing(SkeincatError):
    """Reference to a crossing id the diagram does not contain."""


class UnknownSegment(SkeincatError):
    """Reference to a segment id (or free-loop index) the diagram does not contain."""


class SurfaceMismatch(SkeincatError):
    """Operation applied to diagrams on the wrong surface or on mismatched surfaces."""


class MissingSharedPoint(SkeincatError):
    """Gluing along a shared marked point requires both factors to have one."""


class SizeMismatch(SkeincatError):
    """Arc data does not match the marked points of the diagram."""


class NoMarkedPoints(SkeincatError):
    """Boundary relabelling applied to a diagram without marked points."""


class NotAComplex(SkeincatError):
    """The differential does not square to zero; upstream data is corrupt."""

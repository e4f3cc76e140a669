"""Exception hierarchy shared by every module."""


class DooRouteError(Exception):
    """Base class for all library errors."""


class LayoutError(DooRouteError, ValueError):
    """A layout or polygon failed validation.

    ``index`` is the offending polygon index when one applies
    (``None`` for the boundary, otherwise the hole/piece index).
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DegeneratePolygon(LayoutError):
    pass


class NonSimplePolygon(LayoutError):
    pass


class WrongOrientation(LayoutError):
    pass


class HoleOutsideBoundary(LayoutError):
    pass


class OverlappingHoles(LayoutError):
    pass


class BadPredecomposition(LayoutError):
    pass


class TriangulationFailure(LayoutError):
    pass


class GraphError(DooRouteError, ValueError):
    pass


class EntranceInHole(GraphError):
    pass


class CoincidentAnchors(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    pass


class Unreachable(GraphError):
    pass


class ConfigurationError(DooRouteError, ValueError):
    pass


class EmptyPolyline(ConfigurationError):
    pass


class BadTunnelTag(ConfigurationError):
    pass


class InvalidConfiguration(ConfigurationError):
    """A configuration is not a walk on the spatial graph.

    ``offending_index`` mirrors :func:`doo_route.configuration.validate`.
    """

    def __init__(self, message, offending_index=None):
        super().__init__(message)
        self.offending_index = offending_index


class RouterError(DooRouteError):
    pass


class NoProgress(RouterError):
    pass


class SpanOutOfRange(RouterError, IndexError):
    pass


class SimulationError(DooRouteError):
    pass


class DegenerateSplice(SimulationError):
    pass


class GenerationFailure(SimulationError):
    pass

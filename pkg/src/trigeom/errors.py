"""Exception hierarchy shared by the kernel, the centers and the harness."""


class GeometryError(Exception):
    """Base class for every failed construction or invalid geometric input."""


class ConstructionError(GeometryError):
    """A construction has no (unique, finite) result for the given inputs."""


class CoincidentPoints(ConstructionError):
    pass


class CollinearPoints(ConstructionError):
    pass


class PointNotOnTangent(ConstructionError):
    pass


class QOnTangent(ConstructionError):
    pass


class IdenticalCircles(ConstructionError):
    pass


class ConcentricCircles(ConstructionError):
    pass


class ParallelLines(ConstructionError):
    pass


class NoSecondIntersection(ConstructionError):
    pass


class OnSideline(ConstructionError):
    pass


class ConjugateAtInfinity(ConstructionError):
    pass


class DegenerateTriangle(ConstructionError):
    pass


class EquilateralDegenerate(ConstructionError):
    pass


class PivotOutsideCircumcircle(ConstructionError):
    pass


class PivotIsVertex(ConstructionError):
    pass


class ArityMismatch(GeometryError, TypeError):
    pass


class InvalidSampleCount(ValueError):
    pass

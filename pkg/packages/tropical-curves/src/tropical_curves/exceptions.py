class CurveError(Exception):
    pass


class NotSmoothError(CurveError):
    """The regular subdivision is not a unimodular triangulation."""


class DegenerateCurveError(NotSmoothError):
    """Some lattice point of the square does not appear in the subdivision."""


class CoefficientFormatError(CurveError):
    pass

"""Exception types raised across the pipeline."""


class CircCoordsError(Exception):
    """Base class; ``stage`` names the pipeline stage when known."""

    stage = None


class InvalidInput(CircCoordsError, ValueError):
    pass


class InvalidComplex(CircCoordsError, ValueError):
    pass


class TorsionObstruction(CircCoordsError):
    """The integer lift of a mod-p cocycle is not a cocycle."""

    stage = "lift"

    def __init__(self, message, prime=None, defect=None):
        super().__init__(message)
        self.prime = prime
        self.defect = defect


class NotConverged(CircCoordsError):
    """Iterative solver ran out of iterations; ``best`` holds the best iterate."""

    stage = "harmonic"

    def __init__(self, message, best=None, residual=None, iterations=None):
        super().__init__(message)
        self.best = best
        self.residual = residual
        self.iterations = iterations


class NonIntegralClass(CircCoordsError):
    stage = "integrate"


class UnreliableDegree(CircCoordsError):
    stage = "analysis"

"""Domain errors raised across the package.

Every error is a ``ValueError`` so callers that do not care about the exact
failure mode can still catch the usual thing.
"""


class PentalinkError(ValueError):
    """Base class for all domain errors raised by pentalink."""


class NonPositiveSideError(PentalinkError):
    """A linkage side is zero, negative, or not a finite number."""


class EvenSideCountError(PentalinkError):
    """The tangent-length system is singular for an even number of sides."""


class NonPositiveTangentLengthError(PentalinkError):
    """An operation required strictly positive tangent lengths."""


class NegativeDiscriminantError(PentalinkError):
    """The inradius biquadratic has no real roots for the given tangent lengths."""


class NoSolutionError(PentalinkError):
    """A root-finding problem has no solution in its admissible range."""


class AllZeroSidesError(PentalinkError):
    """All sides are zero; the area polynomial degenerates completely."""


class NotClosableError(PentalinkError):
    """One side is at least the sum of the others, so no closed polygon exists."""


class NotTangentialError(PentalinkError):
    """The linkage has no tangential configuration (some tangent length <= 0)."""


class DegenerateQuadError(PentalinkError):
    """A quadrilateral side is at least the sum of the other three."""


class PitotViolatedError(PentalinkError):
    """The quadrilateral fails the Pitot criterion, so no incircle exists."""


class AngleMismatchError(PentalinkError):
    """Tangent lengths and inradius are inconsistent with the requested winding."""


class NoCircumradiusError(PentalinkError):
    """No circumradius solves the central-angle equation with short arcs only."""


class NotATriangleError(PentalinkError):
    """Three lengths violate the strict triangle inequality."""

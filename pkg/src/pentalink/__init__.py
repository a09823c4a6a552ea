"""Tangential, chordal, and bicentric configurations of planar polygonal
linkages: inradii, cyclic areas, and the resultant-based bicentricity test,
with an independent coordinate-geometry oracle."""

__version__ = "0.1.0"

from .bicentric import (
    BicentricCheck,
    BicentricReport,
    SylvesterAreaPolynomial,
    analyze,
    convex_bicentric_check,
    resultant_condition,
    star_bicentric_check,
    sylvester_area_polynomial,
)
from .chordal import (
    RobbinsPolynomial,
    RootSet,
    convex_cyclic_area,
    ghp_degree,
    real_roots,
    robbins_polynomial,
)
from .core import (
    Linkage,
    SymmetricFunctions,
    TangentLengths,
    TangentialityResult,
    elementary_symmetric,
    is_tangential,
    semiperimeter,
    tangent_lengths,
)
from .errors import (
    AllZeroSidesError,
    AngleMismatchError,
    DegenerateQuadError,
    EvenSideCountError,
    NegativeDiscriminantError,
    NoCircumradiusError,
    NonPositiveSideError,
    NonPositiveTangentLengthError,
    NoSolutionError,
    NotATriangleError,
    NotClosableError,
    NotTangentialError,
    PentalinkError,
    PitotViolatedError,
)
from .oracle import (
    Circle,
    CircleFit,
    EulerTriple,
    PolygonConfiguration,
    circumcircle_fit,
    euler_triple,
    incircle_fit,
    reconstruct_cyclic,
    reconstruct_tangential,
    shoelace_area,
)
from .quad import QuadReport, is_kite, max_inradius, min_inradius, pitot_check, quad_report
from .ratpoly import IsolatedRoot
from .svg import render_svg
from .tangential import (
    InradiusPair,
    SylvesterPolynomial,
    arctan_inradius,
    arctan_sum,
    pentagon_inradii,
    sylvester_polynomial,
    tangential_area,
)

__all__ = [
    "__version__",
    "AllZeroSidesError",
    "AngleMismatchError",
    "BicentricCheck",
    "BicentricReport",
    "Circle",
    "CircleFit",
    "DegenerateQuadError",
    "EulerTriple",
    "EvenSideCountError",
    "InradiusPair",
    "IsolatedRoot",
    "Linkage",
    "NegativeDiscriminantError",
    "NoCircumradiusError",
    "NonPositiveSideError",
    "NonPositiveTangentLengthError",
    "NoSolutionError",
    "NotATriangleError",
    "NotClosableError",
    "NotTangentialError",
    "PentalinkError",
    "PitotViolatedError",
    "PolygonConfiguration",
    "QuadReport",
    "RobbinsPolynomial",
    "RootSet",
    "SylvesterAreaPolynomial",
    "SylvesterPolynomial",
    "SymmetricFunctions",
    "TangentLengths",
    "TangentialityResult",
    "analyze",
    "arctan_inradius",
    "arctan_sum",
    "circumcircle_fit",
    "convex_bicentric_check",
    "convex_cyclic_area",
    "elementary_symmetric",
    "euler_triple",
    "ghp_degree",
    "incircle_fit",
    "is_kite",
    "is_tangential",
    "max_inradius",
    "min_inradius",
    "pentagon_inradii",
    "pitot_check",
    "quad_report",
    "real_roots",
    "reconstruct_cyclic",
    "reconstruct_tangential",
    "render_svg",
    "resultant_condition",
    "robbins_polynomial",
    "semiperimeter",
    "shoelace_area",
    "star_bicentric_check",
    "sylvester_area_polynomial",
    "sylvester_polynomial",
    "tangent_lengths",
    "tangential_area",
]

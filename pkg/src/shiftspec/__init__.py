"""Exact eigenvalues and eigenvectors of weighted shifts on functional graphs.

A weighted shift is the linear map (x_a) -> (w_a * x_phi(a)) attached to a
self-map phi of an index set and a weight per index.  On a finite index set
this package computes the complete eigenvalue set in closed form from the
cycle structure of phi, builds explicit eigenvectors, and cross-checks both
against a dense characteristic-polynomial oracle.  Co-finite presentations
of self-maps on the naturals (successor map beyond a finite boundary) are
supported too; they realize the wandering-orbit case where every nonzero
field element is an eigenvalue, with windowed eigenvector verification.
"""

from .errors import (
    InstanceFormatError,
    InstanceValidationError,
    MalformedLiteralError,
    MixedFieldError,
    NotAnEigenvalueError,
    ShiftSpecError,
    VerificationError,
    WindowTooSmallError,
    WrongInstanceKindError,
    ZeroDenominatorError,
    ZeroEigenvalueError,
    ZeroPolynomialError,
    ZeroRadicandError,
    ZeroTailWeightError,
)
from .fields import Field, FieldElement, PrimeField, RationalField
from .fuzzing import FuzzConfig, FuzzResult, run_fuzz
from .graphs import (
    FunctionalGraph,
    GraphAnalysis,
    PointClass,
    analyze,
    down_closure,
    image,
    orbit_meet,
)
from .infinite import (
    CoFinitePresentation,
    WindowVector,
    classify_presentation,
    infinite_spectrum,
    wandering_eigenvector_window,
    window_verify,
)
from .instances import dumps_instance, load_instance, loads_instance, parse_instance
from .oracle import (
    DenseMatrix,
    Polynomial,
    block_check,
    build_matrix,
    char_poly,
    oracle_spectrum,
    roots_in_field,
    verify_eigenpair,
)
from .shifts import (
    EigenPair,
    SpectrumDescription,
    WeightedShift,
    Witness,
    apply,
    eigenvector,
    kernel_support,
    spectrum,
    spectrum_report,
    unit_shift_spectrum,
    zero_in_spectrum,
)

__all__ = [
    "CoFinitePresentation",
    "DenseMatrix",
    "EigenPair",
    "Field",
    "FieldElement",
    "FunctionalGraph",
    "FuzzConfig",
    "FuzzResult",
    "GraphAnalysis",
    "InstanceFormatError",
    "InstanceValidationError",
    "MalformedLiteralError",
    "MixedFieldError",
    "NotAnEigenvalueError",
    "PointClass",
    "Polynomial",
    "PrimeField",
    "RationalField",
    "ShiftSpecError",
    "SpectrumDescription",
    "VerificationError",
    "WeightedShift",
    "WindowTooSmallError",
    "WindowVector",
    "Witness",
    "WrongInstanceKindError",
    "ZeroDenominatorError",
    "ZeroEigenvalueError",
    "ZeroPolynomialError",
    "ZeroRadicandError",
    "ZeroTailWeightError",
    "analyze",
    "apply",
    "block_check",
    "build_matrix",
    "char_poly",
    "classify_presentation",
    "down_closure",
    "dumps_instance",
    "eigenvector",
    "image",
    "infinite_spectrum",
    "kernel_support",
    "load_instance",
    "loads_instance",
    "orbit_meet",
    "oracle_spectrum",
    "parse_instance",
    "roots_in_field",
    "run_fuzz",
    "spectrum",
    "spectrum_report",
    "unit_shift_spectrum",
    "verify_eigenpair",
    "wandering_eigenvector_window",
    "window_verify",
    "zero_in_spectrum",
]

__version__ = "0.1.0"

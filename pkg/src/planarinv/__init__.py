"""planarinv: analysis toolkit for smooth planar involutions.

Verify the involution identity on a window, classify orientation, locate
fixed points, test the spectral linearization conditions, build the
explicit standard-map conjugacy, certify its injectivity empirically, and
trace the induced invariant foliation.
"""

from .dual import Dual
from .expr import EvaluationError, ExprNode, ParseError, PlanarMap, parse, recentered
from .foliation import (
    RADIAL,
    VERTICAL,
    CanonicalFoliation,
    InversionError,
    Leaf,
    canonical_parameter_range,
    default_leaf_parameters,
    diagonalize_involution,
    invert_standard_map,
    leaf_invariance_check,
    trace_leaf,
)
from .gallery import GalleryEntry, example_c_map, get, list_entries
from .involution import (
    CURVE,
    FIX_MINUS,
    FIX_PLUS,
    ORIENTATION_PRESERVING,
    ORIENTATION_REVERSING,
    UNCLASSIFIED,
    BasePointError,
    DegenerateJacobianError,
    FixedPoint,
    FixedPointScan,
    InvolutionCheck,
    OrientationClass,
    Region,
    base_fixed_point,
    classify_fixed_point,
    find_fixed_points,
    orientation,
    polish_fixed_point,
    verify_involution,
)
from .linalg2 import (
    IDENTITY,
    MINUS_IDENTITY,
    Mat2,
    SingularMatrixError,
    Spectrum,
    eigenvalues,
    is_linear_involution,
    set_distance,
)
from .linearize import (
    COLLISION,
    NO_COLLISION_FOUND,
    InjectivityCertificate,
    JacobianBounds,
    NotApplicableError,
    StandardMap,
    conjugacy_residual,
    injectivity_scan,
    spectrum_shift_check,
    standard_map,
    theorem_B_jacobian_check,
)
from .spectral import (
    COND_A_GAP,
    COND_A_IDENTITY,
    COND_A_REAL,
    COND_B_TRACE,
    ConditionVerdict,
    SpectralAssessment,
    SpectrumSample,
    TheoremAChecks,
    check_condition_A,
    check_condition_B,
    sample_spectrum,
    theorem_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "Dual",
    "ExprNode",
    "PlanarMap",
    "ParseError",
    "EvaluationError",
    "parse",
    "recentered",
    "Mat2",
    "Spectrum",
    "IDENTITY",
    "MINUS_IDENTITY",
    "SingularMatrixError",
    "eigenvalues",
    "is_linear_involution",
    "set_distance",
    "Region",
    "InvolutionCheck",
    "OrientationClass",
    "FixedPoint",
    "FixedPointScan",
    "BasePointError",
    "DegenerateJacobianError",
    "ORIENTATION_PRESERVING",
    "ORIENTATION_REVERSING",
    "FIX_PLUS",
    "FIX_MINUS",
    "CURVE",
    "UNCLASSIFIED",
    "verify_involution",
    "orientation",
    "find_fixed_points",
    "classify_fixed_point",
    "polish_fixed_point",
    "base_fixed_point",
    "SpectrumSample",
    "ConditionVerdict",
    "TheoremAChecks",
    "SpectralAssessment",
    "COND_A_IDENTITY",
    "COND_A_GAP",
    "COND_A_REAL",
    "COND_B_TRACE",
    "sample_spectrum",
    "check_condition_A",
    "check_condition_B",
    "theorem_verdict",
    "StandardMap",
    "InjectivityCertificate",
    "JacobianBounds",
    "NotApplicableError",
    "NO_COLLISION_FOUND",
    "COLLISION",
    "standard_map",
    "conjugacy_residual",
    "injectivity_scan",
    "spectrum_shift_check",
    "theorem_B_jacobian_check",
    "CanonicalFoliation",
    "Leaf",
    "InversionError",
    "RADIAL",
    "VERTICAL",
    "diagonalize_involution",
    "invert_standard_map",
    "trace_leaf",
    "leaf_invariance_check",
    "canonical_parameter_range",
    "default_leaf_parameters",
    "GalleryEntry",
    "list_entries",
    "get",
    "example_c_map",
    "__version__",
]

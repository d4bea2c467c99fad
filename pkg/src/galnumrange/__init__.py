"""Numerical ranges of matrices over degree-2 field extensions L/K.

Finite fields F_{q^2}/F_q and quadratic fields Q(sqrt(alpha))/Q are handled
exactly; a binary64 engine covers C/R.
"""

from .field_core import ExtScalar, FieldCtx, FieldError, finite_field, parse_field, rational_field
from .forms import (
    DeltaVerdict,
    VectorL,
    delta_interval_sample,
    delta_membership,
    form,
    is_definite_up_to,
    norm_equation,
    orthogonalize,
    self_form,
    unit_sphere,
    vector,
)
from .geometry import (
    EllipseSpec,
    delta_convex_closure,
    ellipse_points,
    hull_pair,
    is_delta_convex,
)
from .numrange import (
    HypothesisError,
    MatrixL,
    dagger,
    diag,
    direct_sum,
    eigenvalue_membership,
    ellipse_witnesses,
    herm_decompose,
    is_hermitian,
    joint_num_range_finite,
    matrix,
    nu,
    num_range_finite,
    segment_witnesses,
)
from .verify import Report, run_suites

__all__ = [
    "DeltaVerdict",
    "EllipseSpec",
    "ExtScalar",
    "FieldCtx",
    "FieldError",
    "HypothesisError",
    "MatrixL",
    "Report",
    "VectorL",
    "dagger",
    "delta_convex_closure",
    "delta_interval_sample",
    "delta_membership",
    "diag",
    "direct_sum",
    "eigenvalue_membership",
    "ellipse_points",
    "ellipse_witnesses",
    "finite_field",
    "form",
    "herm_decompose",
    "hull_pair",
    "is_definite_up_to",
    "is_delta_convex",
    "is_hermitian",
    "joint_num_range_finite",
    "matrix",
    "norm_equation",
    "nu",
    "num_range_finite",
    "orthogonalize",
    "parse_field",
    "rational_field",
    "run_suites",
    "segment_witnesses",
    "self_form",
    "unit_sphere",
    "vector",
]

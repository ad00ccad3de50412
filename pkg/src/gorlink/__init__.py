"""Exact h-vector calculus for arithmetically Gorenstein zero-schemes in P^3."""

from .errors import GorlinkError
from .hvector import (
    AGClass,
    CurveClass,
    HVector,
    ci_curve_hvector,
    ci_points_hvector,
    curve_degree_genus,
    difference,
    first_half,
    general_points_hvector,
    integrate,
    is_c2_admissible,
    is_decreasing_type,
    is_g3_admissible,
    scheme_invariants,
)

__version__ = "0.1.0"

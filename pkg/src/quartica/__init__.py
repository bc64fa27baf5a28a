"""Rational points on x^4 + y^4 = z^4 + w^4 through a two-parameter family of plane cubics."""

from .chord import chord_third, conj_descend, line_poly, tangent_double, tangent_step
from .cubic import (
    CubicPoint,
    CurveParams,
    curve_residual,
    euler_point,
    euler_solution,
    fiber_solutions,
    g_from_first,
    g_from_second,
    g_polynomial,
    image_of_quartic,
    lift,
    pair_of,
    verify_parametric_family,
)
from .errors import DegenerateError, FieldMismatchError, NotASolutionError, OffCurveError, QuarticaError
from .search import SearchConfig, brute_force_oracle, r_quadratic, run_search, scan_cell
from .surface import QuarticPoint, SystemPoint, ab_from_quartic, canonicalize, is_trivial, quartic_residual, system_residuals

__version__ = "0.1.0"

"""Exact implicitization of curves and surfaces defined by support functions.

The package turns a trigonometric-polynomial support function of a planar
convex body into an exact rational parametrization of its boundary and, via
resultants over the rationals, into the defining polynomial of the boundary
curve.  The same machinery extends to surfaces whose support function is a
finite spherical-harmonic series: surfaces of revolution can be implicitized
outright, and for general surfaces the package computes the degrees of the
elimination resultants, the degree of the parametrizing map, and the partial
degrees of the implicit equation.

All arithmetic is exact (``fractions.Fraction`` and Gaussian rationals);
no floating point enters any certified result.
"""

from .rationals import GaussianRational, parse_rational, rational_gcd
from .poly import MultiPoly
from .gcdtools import (content, content_and_primitive, gcd_many, gcd_modular,
                       multivar_gcd, poly_gcd, primitive_part,
                       squarefree_part)
from .resultants import (ResultantError, bezout_matrix, resultant,
                         resultant_fast, resultant_measured, rth_root,
                         sylvester_matrix)
from .realroots import (count_real_roots, isolate_real_roots,
                        nonnegative_on_reals, sturm_chain)
from .trig import (Classification, ConvexityResult, SphericalSupport,
                   SupportParseError, TrigPoly, cheb_C, cheb_S, classify,
                   curvature_radius, is_convex, legendre_assoc, one_plus_t2,
                   parity_class, parse_spherical_text, parse_support_text,
                   rotor_orders)
from .curves import (CurveError, ImplicitReport, RationalCurveParam,
                     implicitize, predicted_total_degree,
                     rational_parametrization, tracing_index,
                     verify_vanishing)
from .surfaces import (AssumptionResult, DegreeReport, SurfaceError,
                       SurfaceParam, general_assumptions_check,
                       harmonic_surface, revolution_surface, sendra_degrees,
                       surface_implicitize_small)
from .tables import (HARMONIC_ROWS, REVOLUTION_ROWS, ComputedRow, TableRow,
                     all_rows, compute_row, select_rows)

__version__ = "1.0.0"

__all__ = [
    "GaussianRational", "parse_rational", "rational_gcd",
    "MultiPoly",
    "content", "content_and_primitive", "gcd_many", "gcd_modular",
    "multivar_gcd", "poly_gcd", "primitive_part", "squarefree_part",
    "ResultantError", "bezout_matrix", "resultant", "resultant_fast",
    "resultant_measured", "rth_root", "sylvester_matrix",
    "count_real_roots", "isolate_real_roots", "nonnegative_on_reals",
    "sturm_chain",
    "Classification", "ConvexityResult", "SphericalSupport",
    "SupportParseError", "TrigPoly", "cheb_C", "cheb_S", "classify",
    "curvature_radius", "is_convex", "legendre_assoc", "one_plus_t2",
    "parity_class", "parse_spherical_text", "parse_support_text",
    "rotor_orders",
    "CurveError", "ImplicitReport", "RationalCurveParam", "implicitize",
    "predicted_total_degree", "rational_parametrization", "tracing_index",
    "verify_vanishing",
    "AssumptionResult", "DegreeReport", "SurfaceError", "SurfaceParam",
    "general_assumptions_check", "harmonic_surface", "revolution_surface",
    "sendra_degrees", "surface_implicitize_small",
    "HARMONIC_ROWS", "REVOLUTION_ROWS", "ComputedRow", "TableRow",
    "all_rows", "compute_row", "select_rows",
    "__version__",
]

"""Exact linear Pfaffian representations of ternary forms of degree <= 5."""
from .errors import (AmbiguousDegree, DegreeError, InvalidRing, ParseError,
                     RequiresSymbolicRing, RingMismatch, ShapeError,
                     UnsupportedDegree)
from .pfaffian import (SkewMatrix, SquareMatrix, congruence, delete_rows_cols,
                       determinant, pfaffian, skew_from_upper)
from .polynomial import Poly, PolynomialRing, format_poly, parse
from .representation import (CoefficientVector, Representation, build,
                             coeffs_from_poly, derived_entries, form_ring,
                             generic_coeffs, generic_form, generic_ring,
                             is_nice, poly_from_coeffs, represent, verify)
from .ring import QQ, ZZ, IntegersMod, Mod, make_ring, ring_ops

__version__ = "0.1.0"

"""Exact cusp counting for polynomial maps of the plane into the plane.

The symbolic pipeline certifies one-genericity by a unit-ideal test, builds
the finite-dimensional quotient algebra of the cusp ideal, and reads the
number of positive and negative cusps — globally and inside a region
{u > 0} — off the signatures of four trace forms.  A certified numeric
root-isolation oracle provides an independent cross-check.
"""

from .errors import (CuspCountError, DegenerateRegionForm, DegreeGuardExceeded,
                     DuplicateKeyError, GenericityNotCertified, MissingKeyError,
                     NotSymmetric, NotZeroDimensional, ParseError, Unclassifiable)
from .exprio import (ProblemInput, SolverOptions, format_monomial,
                     format_polynomial, parse_polynomial, parse_problem)
from .groebner import (GREVLEX, LEX, GroebnerBasis, TermOrder, buchberger,
                       is_unit_ideal, is_zero_dimensional, normal_form,
                       standard_monomials)
from .oracle import (CertifiedPoint, Interval, classify_critical_point,
                     isolate_cusps, region_membership)
from .pipeline import (CuspCensus, DerivedSystem, RegionCount, census,
                       certify_genericity, derive_system)
from .poly import Monomial, Polynomial, func_det
from .quotient import (QuotientAlgebra, SymmetricForm, build_algebra,
                       form_matrix, mult_matrix, trace_functional)
from .signature import (SignatureResult, char_poly, is_nondegenerate,
                        signature_by_elimination, signature_of)

__version__ = "0.1.0"

__all__ = [
    "CuspCountError", "DegenerateRegionForm", "DegreeGuardExceeded",
    "DuplicateKeyError", "GenericityNotCertified", "MissingKeyError",
    "NotSymmetric", "NotZeroDimensional", "ParseError", "Unclassifiable",
    "ProblemInput", "SolverOptions", "format_monomial", "format_polynomial",
    "parse_polynomial", "parse_problem",
    "GREVLEX", "LEX", "GroebnerBasis", "TermOrder", "buchberger",
    "is_unit_ideal", "is_zero_dimensional", "normal_form", "standard_monomials",
    "CertifiedPoint", "Interval", "classify_critical_point", "isolate_cusps",
    "region_membership",
    "CuspCensus", "DerivedSystem", "RegionCount", "census",
    "certify_genericity", "derive_system",
    "Monomial", "Polynomial", "func_det",
    "QuotientAlgebra", "SymmetricForm", "build_algebra", "form_matrix",
    "mult_matrix", "trace_functional",
    "SignatureResult", "char_poly", "is_nondegenerate",
    "signature_by_elimination", "signature_of",
    "__version__",
]

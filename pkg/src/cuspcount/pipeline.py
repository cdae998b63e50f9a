"""End-to-end cusp census for a polynomial map of the plane to itself.

From the map f = (f1, f2) we derive: the Jacobian determinant; the velocity
of f along its critical curve (two components, whose common zeros with the
Jacobian are the cusp candidates); the functional determinant of that
velocity pair, whose sign at a cusp equals the local topological degree;
and two transversality minors.  When the five-generator ideal is the whole
ring, every critical point is a fold or a simple cusp and the cusp set is
finite, so the census runs on the quotient algebra by the three-generator
ideal: the signatures of four trace forms yield the number of cusps, the sum
of their degrees, and the split of both inside a region {u > 0}.

All hypotheses are enforced: a failed certificate raises instead of
producing numbers the theory does not back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateRegionForm, GenericityNotCertified
from .exprio import ProblemInput
from .groebner import (GREVLEX, DEFAULT_DEGREE_GUARD, TermOrder, buchberger,
                       is_unit_ideal, normal_form)
from .poly import Monomial, Polynomial, func_det
from .quotient import build_algebra, form_matrix
from .signature import signature_of


@dataclass(frozen=True)
class DerivedSystem:
    """The six polynomials derived from a map f = (f1, f2).

    jac      : Jacobian determinant of (f1, f2).
    vel1/vel2: components of Df applied to the tangent of {jac = 0}, i.e.
               func_det(jac, f1) and func_det(jac, f2); the velocity of f
               along its critical curve.  Cusps are the common zeros of
               jac, vel1, vel2.
    vel_jac  : func_det(vel1, vel2); its sign at a cusp is the local degree.
    minor1/2 : func_det(jac, vel1) and func_det(jac, vel2); if the ideal
               generated by all five polynomials above is the whole ring,
               the map is one-generic with only folds and simple cusps.
    """

    jac: Polynomial
    vel1: Polynomial
    vel2: Polynomial
    vel_jac: Polynomial
    minor1: Polynomial
    minor2: Polynomial


@dataclass(frozen=True)
class RegionCount:
    """Cusps inside the open region {u > 0}, split by local degree."""

    positive: int
    negative: int


@dataclass(frozen=True)
class CuspCensus:
    """Full report of the symbolic cusp count.

    sig1..sig4 are the signatures of the trace forms with weights
    1, vel_jac, u and u*vel_jac; sig3/sig4 and region are present only when
    a region polynomial was supplied (region additionally requires the
    u-weighted form to be nondegenerate, which certifies that no cusp lies
    on the boundary {u = 0}).
    """

    one_generic_certified: bool
    dim: int
    basis: tuple[Monomial, ...]
    sig1: int
    sig2: int
    sig3: int | None
    sig4: int | None
    total_cusps: int
    sum_of_degrees: int
    positive_cusps: int
    negative_cusps: int
    region: RegionCount | None
    oracle: tuple | None = None


def derive_system(f1: Polynomial, f2: Polynomial) -> DerivedSystem:
    """Compute all six derived polynomials exactly."""
    jac = func_det(f1, f2)
    vel1 = func_det(jac, f1)
    vel2 = func_det(jac, f2)
    return DerivedSystem(
        jac=jac,
        vel1=vel1,
        vel2=vel2,
        vel_jac=func_det(vel1, vel2),
        minor1=func_det(jac, vel1),
        minor2=func_det(jac, vel2),
    )


def certify_genericity(derived: DerivedSystem, order: TermOrder = GREVLEX,
                       degree_guard: int = DEFAULT_DEGREE_GUARD) -> bool:
    """True iff the five derived polynomials generate the unit ideal.

    A true verdict certifies that the map is one-generic, that its critical
    points are folds and simple cusps only, and that the cusp set is finite.
    False is a verdict, not an error: the certificate is sufficient but not
    necessary.
    """
    gb = buchberger(
        [derived.jac, derived.vel1, derived.vel2, derived.minor1, derived.minor2],
        order=order, degree_guard=degree_guard)
    return is_unit_ideal(gb)


def _even_half(a: int, b: int, what: str) -> int:
    if (a + b) % 2:
        raise RuntimeError(f"inconsistent signatures while computing {what}: "
                           f"{a} and {b} have odd sum")
    return (a + b) // 2


def census(problem: ProblemInput, order: TermOrder = GREVLEX) -> CuspCensus:
    """Count cusps of the map, globally and (if u is given) inside {u > 0}.

    Raises GenericityNotCertified when the unit-ideal certificate fails,
    NotZeroDimensional if the cusp ideal is not zero-dimensional, and
    DegenerateRegionForm (carrying the partial census) when a region was
    requested but its trace form is degenerate.  DegreeGuardExceeded from
    the basis computations propagates.
    """
    guard = problem.options.degree_guard
    derived = derive_system(problem.f1, problem.f2)
    if not certify_genericity(derived, order=order, degree_guard=guard):
        raise GenericityNotCertified(
            "one-genericity certificate failed: the jacobian, the two "
            "critical-curve velocity components and the two transversality "
            "minors do not generate the unit ideal")

    gb = buchberger([derived.jac, derived.vel1, derived.vel2],
                    order=order, degree_guard=guard)
    algebra = build_algebra(gb)

    vel_jac_reduced = normal_form(derived.vel_jac, gb)
    sig1 = signature_of(form_matrix(algebra, Polynomial.constant(1), "1").matrix).signature
    sig2 = signature_of(form_matrix(algebra, vel_jac_reduced, "orientation").matrix).signature

    positive = _even_half(sig1, sig2, "positive cusp count")
    negative = _even_half(sig1, -sig2, "negative cusp count")
    if positive < 0 or negative < 0:
        raise RuntimeError("negative cusp counts: signature computation is inconsistent")

    base = dict(
        one_generic_certified=True,
        dim=algebra.dim,
        basis=algebra.basis,
        sig1=sig1,
        sig2=sig2,
        total_cusps=sig1,
        sum_of_degrees=sig2,
        positive_cusps=positive,
        negative_cusps=negative,
    )
    if problem.u is None:
        return CuspCensus(sig3=None, sig4=None, region=None, **base)

    u_reduced = normal_form(problem.u, gb)
    region_form = form_matrix(algebra, u_reduced, "region")
    region_result = signature_of(region_form.matrix)
    sig3 = region_result.signature
    sig4 = signature_of(
        form_matrix(algebra, normal_form(u_reduced * vel_jac_reduced, gb),
                    "region*orientation").matrix).signature

    if not region_result.nondegenerate:
        partial = CuspCensus(sig3=sig3, sig4=sig4, region=None, **base)
        raise DegenerateRegionForm(
            "the region trace form is degenerate (a cusp may lie on {u = 0}); "
            "region counts are withheld", census=partial)

    quarter_pos = sig1 + sig2 + sig3 + sig4
    quarter_neg = sig1 - sig2 + sig3 - sig4
    if quarter_pos % 4 or quarter_neg % 4:
        raise RuntimeError("region signature sums not divisible by 4; "
                           "signature computation is inconsistent")
    positive_in = quarter_pos // 4
    negative_in = quarter_neg // 4
    if not (0 <= positive_in <= positive and 0 <= negative_in <= negative):
        raise RuntimeError("region counts exceed global counts; "
                           "signature computation is inconsistent")
    return CuspCensus(sig3=sig3, sig4=sig4,
                      region=RegionCount(positive_in, negative_in), **base)

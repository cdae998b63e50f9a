"""Buchberger's algorithm, multivariate reduction, and ideal certificates.

The two certificates the cusp pipeline needs are decided here: whether an
ideal is the whole ring (reduced basis {1}) and whether it is
zero-dimensional (finitely many standard monomials, which then form a basis
of the quotient algebra).

Internally the algorithm works on primitive integer-coefficient polynomials
(content removed before and during reduction) to avoid rational blow-up;
the published basis is monic with Fraction coefficients.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegreeGuardExceeded, NotZeroDimensional
from .poly import Monomial, Polynomial

DEFAULT_DEGREE_GUARD = 64

# Integer term dict used internally: Monomial -> nonzero int.
_IntPoly = dict


def _grevlex_key(m: Monomial) -> tuple[int, int]:
    return (m[0] + m[1], m[0])


def _lex_key(m: Monomial) -> tuple[int, int]:
    return m


_ORDER_KEYS = {"grevlex": _grevlex_key, "lex": _lex_key}


@dataclass(frozen=True)
class TermOrder:
    """A monomial order with x > y: graded-reverse-lexicographic or lexicographic."""

    kind: str

    def __post_init__(self):
        if self.kind not in _ORDER_KEYS:
            raise ValueError(f"unknown term order {self.kind!r}")

    @property
    def key(self):
        """Sort key function: larger key means larger monomial."""
        return _ORDER_KEYS[self.kind]


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis together with its term order."""

    generators: tuple[Polynomial, ...]
    order: TermOrder

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def leading_monomial(p: Polynomial, order: TermOrder) -> Monomial:
    """Largest monomial of a nonzero polynomial under the order."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    return max(p.terms, key=order.key)


# -- internal integer-coefficient machinery ---------------------------------

def _to_int_poly(p: Polynomial) -> _IntPoly:
    """Clear denominators and remove integer content; keeps the term set."""
    denom_lcm = 1
    for coeff in p.terms.values():
        denom_lcm = denom_lcm * coeff.denominator // gcd(denom_lcm, coeff.denominator)
    out = {m: int(c * denom_lcm) for m, c in p.terms.items()}
    return _make_primitive(out)


def _make_primitive(terms: _IntPoly, key=None) -> _IntPoly:
    """Divide by the integer content; if a key is given, make the lead positive."""
    if not terms:
        return terms
    content = 0
    for c in terms.values():
        content = gcd(content, c)
        if content == 1:
            break
    if key is not None and terms[max(terms, key=key)] < 0:
        content = -content
    if content not in (1, 0):
        return {m: c // content for m, c in terms.items()}
    return terms


def _degree(terms: _IntPoly) -> int:
    return max(m[0] + m[1] for m in terms)


def _reduce_full(p: _IntPoly, reducers, key) -> _IntPoly:
    """Full multivariate division, fraction-free over the integers.

    reducers is a sequence of (lead_monomial, lead_coeff > 0, terms) with
    primitive integer terms.  Every term of the result is irreducible.  The
    result is not content-normalized; callers do that as needed.
    """
    p = dict(p)
    heap = [((-k[0], -k[1]), m) for m in p for k in (key(m),)]
    heapq.heapify(heap)
    done: set[Monomial] = set()
    steps = 0
    while heap:
        _, mono = heapq.heappop(heap)
        if mono in done or mono not in p:
            continue
        hit = None
        for lead, lead_coeff, terms in reducers:
            if lead.ex <= mono.ex and lead.ey <= mono.ey:
                hit = (lead, lead_coeff, terms)
                break
        if hit is None:
            done.add(mono)
            continue
        lead, lead_coeff, terms = hit
        coeff = p[mono]
        common = gcd(coeff, lead_coeff)
        scale_p = lead_coeff // common
        scale_g = coeff // common
        if scale_p != 1:
            for k in p:
                p[k] *= scale_p
        shift_x = mono.ex - lead.ex
        shift_y = mono.ey - lead.ey
        for mg, cg in terms.items():
            target = Monomial(mg.ex + shift_x, mg.ey + shift_y)
            new = p.get(target, 0) - scale_g * cg
            if new:
                if target not in p and target not in done:
                    k = key(target)
                    heapq.heappush(heap, ((-k[0], -k[1]), target))
                p[target] = new
            else:
                p.pop(target, None)
        steps += 1
        if steps % 64 == 0 and p:
            # periodic content removal keeps fraction-free growth bounded
            if max(abs(c) for c in p.values()).bit_length() > 1 << 12:
                p = _make_primitive(p)
    return p


def _spoly(f, g) -> _IntPoly:
    """S-polynomial of two primitive entries (lead, lead_coeff, terms)."""
    (lmf, lcf, tf), (lmg, lcg, tg) = f, g
    lcm_mono = lmf.lcm(lmg)
    common = gcd(lcf, lcg)
    mult_f = lcg // common
    mult_g = lcf // common
    fx, fy = lcm_mono.ex - lmf.ex, lcm_mono.ey - lmf.ey
    gx, gy = lcm_mono.ex - lmg.ex, lcm_mono.ey - lmg.ey
    out: _IntPoly = {}
    for m, c in tf.items():
        out[Monomial(m.ex + fx, m.ey + fy)] = c * mult_f
    for m, c in tg.items():
        target = Monomial(m.ex + gx, m.ey + gy)
        new = out.get(target, 0) - c * mult_g
        if new:
            out[target] = new
        else:
            out.pop(target, None)
    return out


def _entry(terms: _IntPoly, key):
    """Package primitive terms as (lead, lead_coeff, terms) with positive lead."""
    terms = _make_primitive(terms, key)
    lead = max(terms, key=key)
    return (lead, terms[lead], terms)


def _is_constant(terms: _IntPoly) -> bool:
    return len(terms) == 1 and Monomial(0, 0) in terms


def buchberger(gens, order: TermOrder = GREVLEX,
               degree_guard: int = DEFAULT_DEGREE_GUARD,
               verify: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    gens must be a non-empty sequence of Polynomial; zero polynomials are
    ignored.  Raises DegreeGuardExceeded if any generator or intermediate
    reduction result exceeds degree_guard.  With verify=True (the default)
    the Buchberger criterion — every S-polynomial reduces to zero — is
    re-checked on the output basis.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger requires at least one generator")
    key = order.key
    basis = []
    for g in gens:
        if g.is_zero():
            continue
        if g.degree > degree_guard:
            raise DegreeGuardExceeded(g.degree, degree_guard, context="buchberger input")
        terms = _to_int_poly(g)
        if _is_constant(terms):
            return GroebnerBasis((Polynomial.constant(1),), order)
        basis.append(_entry(terms, key))
    if not basis:
        return GroebnerBasis((), order)

    pairs: set[tuple[int, int]] = {(i, j) for j in range(len(basis)) for i in range(j)}
    pair_lcm = {(i, j): basis[i][0].lcm(basis[j][0]) for (i, j) in pairs}

    def chain_redundant(i: int, j: int, lcm_mono: Monomial) -> bool:
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            lead_k = basis[k][0]
            if lead_k.divides(lcm_mono):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    return True
        return False

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(pair_lcm[ij]), ij))
        pairs.discard((i, j))
        lcm_mono = pair_lcm.pop((i, j))
        lead_i, lead_j = basis[i][0], basis[j][0]
        if lead_i.is_coprime(lead_j):
            continue
        if chain_redundant(i, j, lcm_mono):
            continue
        remainder = _reduce_full(_spoly(basis[i], basis[j]), basis, key)
        if not remainder:
            continue
        if _degree(remainder) > degree_guard:
            raise DegreeGuardExceeded(_degree(remainder), degree_guard,
                                      context="buchberger reduction")
        if _is_constant(remainder):
            return GroebnerBasis((Polynomial.constant(1),), order)
        entry = _entry(remainder, key)
        new_index = len(basis)
        basis.append(entry)
        for k in range(new_index):
            pairs.add((k, new_index))
            pair_lcm[(k, new_index)] = basis[k][0].lcm(entry[0])

    reduced = _interreduce(basis, key)
    result = GroebnerBasis(tuple(_to_monic_polynomial(t, key) for t in reduced), order)
    if verify:
        _verify_buchberger_criterion(result)
    return result


def _interreduce(basis, key):
    """Minimalize (drop entries with redundant leads) and fully reduce tails."""
    minimal = []
    for entry in sorted(basis, key=lambda e: key(e[0])):
        if not any(kept[0].divides(entry[0]) for kept in minimal):
            minimal.append(entry)
    reduced = []
    for idx, entry in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        if others:
            terms = _reduce_full(entry[2], others, key)
        else:
            terms = entry[2]
        reduced.append(_make_primitive(terms, key))
    return reduced


def _to_monic_polynomial(terms: _IntPoly, key) -> Polynomial:
    lead_coeff = terms[max(terms, key=key)]
    return Polynomial({m: Fraction(c, lead_coeff) for m, c in terms.items()})


def _verify_buchberger_criterion(gb: GroebnerBasis) -> None:
    gens = gb.generators
    for j in range(len(gens)):
        for i in range(j):
            li = leading_monomial(gens[i], gb.order)
            lj = leading_monomial(gens[j], gb.order)
            if li.is_coprime(lj):
                continue
            lcm_mono = li.lcm(lj)
            spoly = (Polynomial.monomial(lcm_mono.quotient(li)) * gens[i]
                     - Polynomial.monomial(lcm_mono.quotient(lj)) * gens[j])
            if not normal_form(spoly, gb).is_zero():
                raise RuntimeError(
                    f"Buchberger criterion violated for generators {i}, {j}")


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of full division of p by the basis.

    No term of the result is divisible by any leading monomial of the basis,
    and p minus the result lies in the ideal.  Idempotent and linear over
    the rationals.
    """
    key = gb.order.key
    reducers = [(leading_monomial(g, gb.order), g) for g in gb.generators]
    work = dict(p.terms)
    heap = [((-k[0], -k[1]), m) for m in work for k in (key(m),)]
    heapq.heapify(heap)
    done: set[Monomial] = set()
    while heap:
        _, mono = heapq.heappop(heap)
        if mono in done or mono not in work:
            continue
        hit = None
        for lead, g in reducers:
            if lead.ex <= mono.ex and lead.ey <= mono.ey:
                hit = (lead, g)
                break
        if hit is None:
            done.add(mono)
            continue
        lead, g = hit
        coeff = work[mono]
        shift_x = mono.ex - lead.ex
        shift_y = mono.ey - lead.ey
        for mg, cg in g.terms.items():
            target = Monomial(mg.ex + shift_x, mg.ey + shift_y)
            new = work.get(target, 0) - coeff * cg
            if new:
                if target not in work and target not in done:
                    k = key(target)
                    heapq.heappush(heap, ((-k[0], -k[1]), target))
                work[target] = new
            else:
                work.pop(target, None)
    return Polynomial(work)


def is_unit_ideal(gb: GroebnerBasis) -> bool:
    """True iff the reduced basis is {1}, i.e. the ideal is the whole ring."""
    return len(gb.generators) == 1 and gb.generators[0] == Polynomial.constant(1)


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff the quotient is finite-dimensional.

    Criterion: for each variable some pure power of it (possibly the
    constant 1) appears among the leading monomials.
    """
    has_x_power = False
    has_y_power = False
    for g in gb.generators:
        lead = leading_monomial(g, gb.order)
        if lead.ey == 0:
            has_x_power = True
        if lead.ex == 0:
            has_y_power = True
    return has_x_power and has_y_power


def standard_monomials(gb: GroebnerBasis) -> tuple[Monomial, ...]:
    """All monomials outside the leading-term ideal, ascending in the order.

    These form a vector-space basis of the quotient algebra; the length of
    the result is its dimension.  Raises NotZeroDimensional when infinite.
    """
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional(
            "the ideal is not zero-dimensional: no pure power of each "
            "variable occurs among the leading monomials")
    leads = [leading_monomial(g, gb.order) for g in gb.generators]
    bound_x = min(lm.ex for lm in leads if lm.ey == 0)
    bound_y = min(lm.ey for lm in leads if lm.ex == 0)
    out = [
        Monomial(a, b)
        for a in range(bound_x)
        for b in range(bound_y)
        if not any(lm.divides(Monomial(a, b)) for lm in leads)
    ]
    out.sort(key=gb.order.key)
    return tuple(out)

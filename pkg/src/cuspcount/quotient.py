"""The finite-dimensional quotient algebra A = Q[x,y]/I and its trace forms.

Given a reduced zero-dimensional Groebner basis, the standard monomials form
a vector-space basis of A.  Multiplication by x and by y become commuting
square matrices, the trace of multiplication-by-h defines a linear
functional T, and each polynomial delta yields a symmetric quadratic form
a -> T(delta * a^2) whose signature counts the real zeros of the ideal
weighted by the sign of delta there.

Normal forms of monomials are computed once and cached: the coordinate
vector of x^a*y^b is reached from its neighbours by one matrix-vector
product, so assembling a form matrix costs O(dim^2) cached normal forms
rather than a fresh division per entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exprio import format_polynomial
from .groebner import GroebnerBasis, normal_form, standard_monomials
from .poly import Monomial, Polynomial

Matrix = tuple[tuple[Fraction, ...], ...]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SymmetricForm:
    """Exact symmetric matrix of a quadratic form on the quotient algebra."""

    matrix: Matrix
    delta_label: str

    @property
    def dimension(self) -> int:
        return len(self.matrix)


class QuotientAlgebra:
    """Basis, multiplication matrices and trace data of Q[x,y]/I.

    Immutable after construction (internal caches only grow); instances may
    be shared freely between threads and the form builders below.
    """

    def __init__(self, gb: GroebnerBasis, basis: tuple[Monomial, ...],
                 mult_x: Matrix, mult_y: Matrix):
        self.gb = gb
        self.basis = basis
        self.mult_x = mult_x
        self.mult_y = mult_y
        self._index = {m: i for i, m in enumerate(basis)}
        self._vectors: dict[Monomial, tuple[Fraction, ...]] = {}
        for i, mono in enumerate(basis):
            unit = tuple(Fraction(int(j == i)) for j in range(len(basis)))
            self._vectors[mono] = unit
        if not basis:
            self._vectors[Monomial(0, 0)] = ()
        self._traces: dict[Monomial, Fraction] = {}
        self._tau: tuple[Fraction, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, mono: Monomial) -> tuple[Fraction, ...]:
        """Coordinate vector of the residue class of a monomial."""
        cached = self._vectors.get(mono)
        if cached is not None:
            return cached
        # reach the monomial from a smaller cached one, one variable at a time
        pending = [mono]
        while pending:
            m = pending[-1]
            if m in self._vectors:
                pending.pop()
                continue
            prev = Monomial(m.ex - 1, m.ey) if m.ex else Monomial(m.ex, m.ey - 1)
            prev_vec = self._vectors.get(prev)
            if prev_vec is None:
                pending.append(prev)
                continue
            matrix = self.mult_x if m.ex else self.mult_y
            self._vectors[m] = _matvec(matrix, prev_vec)
            pending.pop()
        return self._vectors[mono]

    def _trace_of_monomial(self, mono: Monomial) -> Fraction:
        cached = self._traces.get(mono)
        if cached is None:
            tau = self._tau_vector()
            vec = self.coordinates(mono)
            cached = sum((t * v for t, v in zip(tau, vec) if v), _ZERO)
            self._traces[mono] = cached
        return cached

    def _tau_vector(self) -> tuple[Fraction, ...]:
        """Traces of multiplication by each basis monomial."""
        if self._tau is None:
            tau = []
            for b in self.basis:
                total = _ZERO
                for j, other in enumerate(self.basis):
                    total += self.coordinates(b * other)[j]
                tau.append(total)
            self._tau = tuple(tau)
        return self._tau


def _matvec(matrix: Matrix, vec) -> tuple[Fraction, ...]:
    return tuple(
        sum((row[c] * vec[c] for c in range(len(vec)) if vec[c]), _ZERO)
        for row in matrix
    )


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[r][k] * b[k][c] for k in range(n) if a[r][k]), _ZERO)
              for c in range(cols))
        for r in range(n)
    )


def build_algebra(gb: GroebnerBasis) -> QuotientAlgebra:
    """Construct the quotient algebra for a reduced zero-dimensional basis.

    Raises NotZeroDimensional otherwise.  The multiplication matrices are
    verified to commute before the algebra is returned.
    """
    basis = standard_monomials(gb)
    dim = len(basis)
    standard = set(basis)
    border: dict[Monomial, tuple[Fraction, ...]] = {}
    index = {m: i for i, m in enumerate(basis)}

    def column(product: Monomial) -> tuple[Fraction, ...]:
        if product in standard:
            return tuple(Fraction(int(j == index[product])) for j in range(dim))
        vec = border.get(product)
        if vec is None:
            residue = normal_form(Polynomial.monomial(product), gb)
            coords = [_ZERO] * dim
            for mono, coeff in residue.terms.items():
                coords[index[mono]] = coeff
            vec = tuple(coords)
            border[product] = vec
        return vec

    cols_x = [column(Monomial(b.ex + 1, b.ey)) for b in basis]
    cols_y = [column(Monomial(b.ex, b.ey + 1)) for b in basis]
    mult_x = tuple(tuple(cols_x[c][r] for c in range(dim)) for r in range(dim))
    mult_y = tuple(tuple(cols_y[c][r] for c in range(dim)) for r in range(dim))
    if _matmul(mult_x, mult_y) != _matmul(mult_y, mult_x):
        raise RuntimeError("multiplication matrices fail to commute; "
                           "the basis is not a Groebner basis of its ideal")
    algebra = QuotientAlgebra(gb, basis, mult_x, mult_y)
    algebra._vectors.update(border)
    return algebra


def mult_matrix(algebra: QuotientAlgebra, h: Polynomial) -> Matrix:
    """Matrix of multiplication by h on the quotient, in the standard basis.

    Equals the evaluation of h at the pair of generator matrices; h is
    reduced internally, so any member of the ideal yields the zero matrix.
    """
    dim = algebra.dim
    terms = list(h.terms.items())
    columns = []
    for b in algebra.basis:
        col = [_ZERO] * dim
        for mono, coeff in terms:
            vec = algebra.coordinates(mono * b)
            for r in range(dim):
                if vec[r]:
                    col[r] += coeff * vec[r]
        columns.append(col)
    return tuple(tuple(columns[c][r] for c in range(dim)) for r in range(dim))


def trace_functional(algebra: QuotientAlgebra, h: Polynomial) -> Fraction:
    """Trace of multiplication by h; linear in h and blind to ideal members."""
    total = _ZERO
    for mono, coeff in h.terms.items():
        total += coeff * algebra._trace_of_monomial(mono)
    return total


def form_matrix(algebra: QuotientAlgebra, delta: Polynomial,
                label: str | None = None) -> SymmetricForm:
    """Symmetric matrix of the quadratic form a -> trace(delta * a^2).

    Entry (i, j) is the trace of multiplication by delta * b_i * b_j, so the
    matrix is symmetric by construction.
    """
    dim = algebra.dim
    terms = list(delta.terms.items())
    rows = [[_ZERO] * dim for _ in range(dim)]
    for i in range(dim):
        bi = algebra.basis[i]
        for j in range(i, dim):
            product = bi * algebra.basis[j]
            value = _ZERO
            for mono, coeff in terms:
                value += coeff * algebra._trace_of_monomial(product * mono)
            rows[i][j] = rows[j][i] = value
    return SymmetricForm(tuple(tuple(r) for r in rows),
                         label if label is not None else format_polynomial(delta))

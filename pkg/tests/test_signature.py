"""Signature machinery: char poly against a brute-force oracle, Descartes
counts, Sylvester invariance, and agreement of the two independent routes."""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from cuspcount.errors import NotSymmetric
from cuspcount.signature import (SignatureResult, _char_poly_crt,
                                 _faddeev_leverrier, char_poly,
                                 is_nondegenerate, signature_by_elimination,
                                 signature_of)


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def brute_force_char_poly(matrix):
    """det(lambda*I - M) by Leibniz expansion over permutations; oracle for n <= 6."""
    n = len(matrix)
    total = [Fraction(0)] * (n + 1)
    for perm in permutations(range(n)):
        prod = [Fraction(1)]
        for i in range(n):
            if perm[i] == i:
                prod = _poly_mul(prod, [-Fraction(matrix[i][i]), Fraction(1)])
            else:
                prod = [-Fraction(matrix[i][perm[i]]) * c for c in prod]
        sign = _perm_sign(perm)
        for k, c in enumerate(prod):
            total[k] += sign * c
    return tuple(reversed(total))


def random_symmetric(rng, n, lo=-9, hi=9, singular_bias=False):
    m = [[Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(n)]
         for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[j][i] = m[i][j]
    if singular_bias and n >= 2 and rng.random() < 0.4:
        # duplicate a row and column to force rank deficiency
        src, dst = 0, n - 1
        for k in range(n):
            m[dst][k] = m[src][k]
        for k in range(n):
            m[k][dst] = m[k][src]
        m[dst][dst] = m[src][src]
    return m


class TestCharPoly:
    def test_two_by_two(self):
        assert char_poly([[4, 2], [2, 2]]) == (1, -6, 4)

    def test_zero_one_by_one(self):
        assert char_poly([[0]]) == (1, 0)

    def test_empty_matrix(self):
        assert char_poly([]) == (1,)

    def test_rational_entries(self):
        m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 3), Fraction(1, 5)]]
        assert char_poly(m) == brute_force_char_poly(m)

    def test_against_brute_force(self):
        rng = random.Random(20280)
        for _ in range(200):
            n = rng.randint(1, 5)
            m = random_symmetric(rng, n)
            assert char_poly(m) == brute_force_char_poly(m)

    def test_non_symmetric_input_still_exact(self):
        rng = random.Random(20281)
        for _ in range(100):
            n = rng.randint(1, 4)
            m = [[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
            assert char_poly(m) == brute_force_char_poly(m)

    def test_modular_route_matches_trace_recursion(self):
        rng = random.Random(20282)
        for _ in range(10):
            n = rng.randint(13, 16)
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    m[i][j] = m[j][i] = rng.randint(-50, 50) * 10 ** rng.randint(0, 9)
            assert _char_poly_crt(m) == _faddeev_leverrier(m)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            char_poly([[1, 2]])


class TestSignatureOf:
    def test_positive_definite(self):
        result = signature_of([[4, 2], [2, 2]])
        assert result == SignatureResult(2, 2, 2, 0, True)

    def test_negative_definite(self):
        assert signature_of([[-96, -48], [-48, -48]]).signature == -2

    def test_indefinite_nondegenerate(self):
        result = signature_of([[-76, -38], [-38, -18]])
        assert result.signature == 0
        assert result.nondegenerate

    def test_degenerate_diag(self):
        result = signature_of([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
        assert result == SignatureResult(0, 2, 1, 1, False)

    def test_empty_form(self):
        assert signature_of([]) == SignatureResult(0, 0, 0, 0, True)

    def test_zero_matrix(self):
        assert signature_of([[0, 0], [0, 0]]) == SignatureResult(0, 0, 0, 0, False)

    def test_requires_symmetry(self):
        with pytest.raises(NotSymmetric):
            signature_of([[1, 2], [3, 4]])


class TestNondegeneracy:
    def test_region_form_of_two_cusp_map(self):
        assert is_nondegenerate([[-76, -38], [-38, -18]])

    def test_rank_one(self):
        assert not is_nondegenerate([[1, 1], [1, 1]])

    def test_empty(self):
        assert is_nondegenerate([])


class TestInvariance:
    def test_scaling(self):
        rng = random.Random(20284)
        for _ in range(100):
            n = rng.randint(1, 5)
            m = random_symmetric(rng, n)
            base = signature_of(m)
            doubled = [[3 * v for v in row] for row in m]
            negated = [[-v for v in row] for row in m]
            assert signature_of(doubled) == base
            flipped = signature_of(negated)
            assert flipped.signature == -base.signature
            assert flipped.rank == base.rank

    def test_elimination_handles_zero_diagonal(self):
        hyperbolic = [[0, 5], [5, 0]]
        assert signature_by_elimination(hyperbolic) == SignatureResult(0, 2, 1, 1, True)
        assert signature_of(hyperbolic) == SignatureResult(0, 2, 1, 1, True)

"""Matrices, characteristic polynomials (vs a cofactor oracle), spectral radii."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numgk.algebraic import RealAlgebraicEnclosure, algebraic_equals
from numgk.matrices import Matrix, block_diagonal, char_poly
from numgk.minpoly import algebraic_power, factor_int_poly, minimize_enclosure
from numgk.polynomials import IntPolynomial
from numgk.spectral import spectral_radius, spectral_radius_exceeds_one


# --- independent oracle: cofactor-expansion determinant of (x*I - m) --------

def _pa(f, g):
    out = [Fraction(0)] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def _pm(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_det(mat):
    """Laplace expansion along the first row; entries are coefficient lists."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = []
    for j in range(n):
        entry = mat[0][j]
        if not entry:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in mat[1:]]
        term = _pm(entry, _poly_det(minor))
        if j % 2 == 1:
            term = [-c for c in term]
        total = _pa(total, term)
    return total


def char_poly_oracle(m: Matrix) -> list[Fraction]:
    n = m.dimension
    mat = [
        [
            _pa([-m.entry(i, j)], [Fraction(0), Fraction(1)] if i == j else [])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(mat)


class TestMatrix:
    def test_mul_identity(self):
        m = Matrix.from_rows([[1, 2], [3, 4]])
        assert m * Matrix.identity(2) == m
        assert (m ** 0) == Matrix.identity(2)

    def test_det_inverse(self):
        m = Matrix.from_rows([[1, 2], [3, 4]])
        assert m.det() == -2
        assert m * m.inverse() == Matrix.identity(2)
        assert (m ** -1) == m.inverse()

    def test_singular(self):
        with pytest.raises(ValueError):
            Matrix.from_rows([[1, 2], [2, 4]]).inverse()

    def test_not_square(self):
        with pytest.raises(ValueError):
            Matrix.from_rows([[1, 2], [3]])

    def test_block_diagonal(self):
        m = block_diagonal(Matrix.identity(2), Matrix.from_rows([[5]]))
        assert m.dimension == 3
        assert m.entry(2, 2) == 5 and m.entry(0, 2) == 0

    def test_transpose_and_norm(self):
        m = Matrix.from_rows([[1, -2], [3, 4]])
        assert m.transpose().rows == ((1, 3), (-2, 4))
        assert m.inf_norm() == 7


class TestCharPoly:
    def test_identity_4x4(self):
        p = char_poly(Matrix.identity(4))
        lin = IntPolynomial((-1, 1))
        assert p == lin * lin * lin * lin  # (x - 1)^4
        assert p.coeffs == (1, -4, 6, -4, 1)

    def test_2x2_block(self):
        p = char_poly(Matrix.from_rows([[1, -4], [4, -15]]))
        assert p.coeffs == (1, 14, 1)

    def test_zero_3x3(self):
        p = char_poly(Matrix.from_rows([[0] * 3] * 3))
        assert p.coeffs == (0, 0, 0, 1)

    def test_rational_entries_positive_scalar(self):
        m = Matrix.from_rows([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
        p = char_poly(m)
        # det(xI - m) = (x - 1/2)(x - 1/3); primitive integer multiple
        assert p.coeffs == (1, -5, 6)

    @given(
        st.integers(1, 5).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n
            )
        )
    )
    def test_against_cofactor_oracle(self, rows):
        m = Matrix.from_rows(rows)
        got = char_poly(m)
        want = char_poly_oracle(m)
        assert [Fraction(c) for c in got.coeffs] == want


class TestSpectralRadius:
    def test_identity_exact_one(self):
        for n in (1, 2, 5):
            enc = spectral_radius(Matrix.identity(n))
            assert enc.is_point and enc.lo == 1

    def test_zero_matrix(self):
        enc = spectral_radius(Matrix.from_rows([[0, 0], [0, 0]]))
        assert enc.is_point and enc.lo == 0

    def test_type3_composite(self):
        m = Matrix.from_rows(
            [[1, -4, -1, 4], [4, -15, -4, 15], [0, 0, 1, -4], [0, 0, 1, -3]]
        )
        enc = spectral_radius(m)
        assert enc.poly.coeffs == (1, -14, 1)
        assert enc.refine(Fraction(1, 10**10)).decimal(9) == "13.928203230"

    def test_k3_composite_exact_one(self):
        m = Matrix.from_rows([[0, 0, -1], [0, 1, -2], [-1, 1, -1]])
        assert char_poly(m).coeffs == (1, 0, 0, 1)
        enc = spectral_radius(m)
        assert enc.is_point and enc.lo == 1

    def test_transpose_invariance(self):
        m = Matrix.from_rows([[1, -4, -1, 4], [4, -15, -4, 15], [0, 0, 1, -4], [0, 0, 1, -3]])
        assert algebraic_equals(spectral_radius(m), spectral_radius(m.transpose()))

    def test_power_law(self):
        m = Matrix.from_rows([[1, -4], [4, -15]])
        rho = spectral_radius(m)
        for k in (1, 2, 3, 4):
            lhs = spectral_radius(m**k)
            rhs = algebraic_power(rho, k)
            assert algebraic_equals(lhs, rhs)
            assert lhs.poly == rhs.poly  # minimal polynomials agree
            assert lhs.refine(Fraction(1, 10**9)).decimal(9) == rhs.refine(Fraction(1, 10**9)).decimal(9)

    def test_exceeds_one_flag(self):
        assert spectral_radius_exceeds_one(Matrix.from_rows([[1, -4], [4, -15]]))
        assert not spectral_radius_exceeds_one(Matrix.identity(3))
        assert not spectral_radius_exceeds_one(Matrix.from_rows([[0, -1], [1, 0]]))

    def test_unit_det_radius_at_least_one(self):
        m = Matrix.from_rows([[2, 1], [1, 1]])  # det 1
        assert spectral_radius(m).compare_rational(1) >= 0

    def test_norm_sanity_crosscheck(self):
        m = Matrix.from_rows([[1, -4, -1, 4], [4, -15, -4, 15], [0, 0, 1, -4], [0, 0, 1, -3]])
        enc = spectral_radius(m).refine(Fraction(1, 1000))
        norm = float((m**32).inf_norm()) ** (1.0 / 32)
        assert float(enc.lo) / 2 <= norm <= float(enc.hi) * 2

    def test_minimize_enclosure(self):
        # sqrt(2) isolated on a reducible polynomial
        poly = (IntPolynomial((-2, 0, 1)) * IntPolynomial((-5, 1))).normalized()
        enc = RealAlgebraicEnclosure(poly, Fraction(1), Fraction(2))
        m = minimize_enclosure(enc)
        assert m.poly.coeffs == (-2, 0, 1)

    def test_factor_int_poly(self):
        p = IntPolynomial((1, 2, 1)) * IntPolynomial((-3, 1))
        factors = factor_int_poly(p)
        assert ((IntPolynomial((1, 1)), 2) in factors) and ((IntPolynomial((-3, 1)), 1) in factors)

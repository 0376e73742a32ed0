"""Minimal polynomials of enclosed algebraic numbers.

Rational factorization is delegated to sympy (the one external computer
algebra dependency); isolation, counting, and every certificate stay on the
in-house Sturm machinery.
"""

from __future__ import annotations

from fractions import Fraction

from .algebraic import (
    RealAlgebraicEnclosure,
    isolate_largest_real_root,
    rational_sqrt_bounds,
)
from .polynomials import (
    IntPolynomial,
    count_roots_halfopen,
    square_free_part,
    sturm_chain,
)

_SYMPY_X = None


def _sympy_x():
    global _SYMPY_X
    if _SYMPY_X is None:
        import sympy

        _SYMPY_X = (sympy, sympy.Symbol("x"))
    return _SYMPY_X


def factor_int_poly(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Irreducible factors of p over Q with multiplicities (content dropped).

    Factors are primitive integer polynomials with positive leading
    coefficient, sorted by (degree, coefficients) for determinism.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    sympy, x = _sympy_x()
    expr = sum(c * x**i for i, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, x))
    out = []
    for f, mult in factors:
        coeffs = [int(c) for c in reversed(f.all_coeffs())]
        out.append((IntPolynomial(tuple(coeffs)).normalized(), int(mult)))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def minimize_enclosure(enc: RealAlgebraicEnclosure) -> RealAlgebraicEnclosure:
    """Re-anchor an enclosure on the minimal polynomial of its root."""
    if enc.is_point:
        v = enc.lo
        minimal = IntPolynomial((-v.numerator, v.denominator)).normalized()
        if enc.poly == minimal:
            return enc
        return RealAlgebraicEnclosure._trusted(minimal, v, v)
    sf = enc.poly if enc.poly == square_free_part(enc.poly) else square_free_part(enc.poly)
    factors = [f for f, _ in factor_int_poly(sf)]
    if len(factors) == 1 and factors[0] == enc.poly:
        return enc
    for f in factors:
        if f.degree < 1:
            continue
        # the enclosure's root belongs to exactly one irreducible factor;
        # f divides the square-free poly, so the interval endpoints are
        # automatically non-roots of f
        if count_roots_halfopen(sturm_chain(f), enc.lo, enc.hi) == 1:
            if f.degree == 1:
                b, a = f.coeffs[0], f.coeffs[1]
                v = Fraction(-b, a)
                return RealAlgebraicEnclosure._trusted(
                    IntPolynomial((-v.numerator, v.denominator)).normalized(), v, v
                )
            return RealAlgebraicEnclosure._trusted(f, enc.lo, enc.hi)
    raise AssertionError("no irreducible factor isolates the root")


def algebraic_sqrt(enc: RealAlgebraicEnclosure) -> RealAlgebraicEnclosure:
    """Enclosure of the nonnegative square root of a nonnegative enclosure.

    The input must already sit on its minimal polynomial; the result does
    too (rational squares collapse to exact points).
    """
    if enc.compare_rational(0) < 0:
        raise ValueError("square root of a negative algebraic number")
    if enc.is_point:
        s = enc.lo
        if s == 0:
            return RealAlgebraicEnclosure.exact(0)
        n = s.numerator * s.denominator
        import math

        r = math.isqrt(n)
        if r * r == n:
            return RealAlgebraicEnclosure.exact(Fraction(r, s.denominator))
        # sqrt irrational with minimal polynomial q*x^2 - p
        minimal = IntPolynomial((-s.numerator, 0, s.denominator)).normalized()
        extra = 1
        while True:
            lo, hi = rational_sqrt_bounds(s, extra)
            if lo > 0 and minimal.sign_at(lo) != 0 and minimal.sign_at(hi) != 0:
                if count_roots_halfopen(sturm_chain(minimal), lo, hi) == 1:
                    return RealAlgebraicEnclosure._trusted(minimal, lo, hi)
            extra += 2
    # interval case: root s > 0 strictly (0 would be rational, hence a point)
    s_enc = enc
    while s_enc.lo <= 0:
        s_enc = s_enc.refine(s_enc.width / 4)
    candidates = [f for f, _ in factor_int_poly(enc.poly.substitute_x_squared())]
    while True:
        lo, _ = rational_sqrt_bounds(s_enc.lo)
        _, hi = rational_sqrt_bounds(s_enc.hi)
        matches = []
        for f in candidates:
            if f.degree < 1:
                continue
            if f.sign_at(lo) == 0 or f.sign_at(hi) == 0:
                matches = []
                break
            if count_roots_halfopen(sturm_chain(f), lo, hi) >= 1:
                matches.append(f)
        if len(matches) == 1:
            f = matches[0]
            if count_roots_halfopen(sturm_chain(f), lo, hi) == 1:
                return RealAlgebraicEnclosure._trusted(f, lo, hi)
        s_enc = s_enc.refine(s_enc.width / 4)


def algebraic_power(enc: RealAlgebraicEnclosure, k: int) -> RealAlgebraicEnclosure:
    """Enclosure of root**k for a nonnegative enclosure, on its minimal poly."""
    from .polynomials import power_transform

    if k < 1:
        raise ValueError("k must be positive")
    if enc.compare_rational(0) < 0:
        raise ValueError("power transform implemented for nonnegative roots")
    if k == 1:
        return minimize_enclosure(enc)
    if enc.is_point:
        return RealAlgebraicEnclosure.exact(enc.lo**k)
    raised = power_transform(enc.poly, k)
    candidates = [f for f, _ in factor_int_poly(raised)]
    x = enc
    while x.lo < 0:
        x = x.refine(x.width / 4)
    while True:
        lo, hi = x.lo**k, x.hi**k
        matches = []
        for f in candidates:
            if f.degree < 1:
                continue
            if f.sign_at(lo) == 0 or f.sign_at(hi) == 0:
                matches = []
                break
            if count_roots_halfopen(sturm_chain(f), lo, hi) >= 1:
                matches.append(f)
        if len(matches) == 1:
            f = matches[0]
            if count_roots_halfopen(sturm_chain(f), lo, hi) == 1:
                return RealAlgebraicEnclosure._trusted(f, lo, hi)
        x = x.refine(x.width / 4)


def largest_real_root_minimal(p: IntPolynomial) -> RealAlgebraicEnclosure | None:
    """Largest real root of p as an enclosure on its minimal polynomial.

    Factors first so all Sturm work happens on small irreducible pieces.
    """
    from .algebraic import algebraic_compare

    best: RealAlgebraicEnclosure | None = None
    for f, _ in factor_int_poly(p):
        if f.degree < 1:
            continue
        if f.degree == 1:
            enc = RealAlgebraicEnclosure.exact(Fraction(-f.coeffs[0], f.coeffs[1]))
        else:
            enc = isolate_largest_real_root(f)
            if enc is None:
                continue
            if enc.is_point:
                enc = minimize_enclosure(enc)
        if best is None or algebraic_compare(enc, best) > 0:
            best = enc
    return best

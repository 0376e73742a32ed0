"""Real algebraic numbers as certified enclosures.

An enclosure is a square-free integer polynomial plus an isolating rational
interval. Point intervals carry exact rational roots. Every comparison and
refinement is exact: signs are evaluated in integer arithmetic and root
counts come from Sturm chains, so verdicts like "equals 1" are decisions,
not approximations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import (
    IntPolynomial,
    count_roots_halfopen,
    root_bound,
    square_free_part,
    sturm_chain,
)


def _format_decimal(x: Fraction, digits: int) -> str:
    """Round x to `digits` fractional digits (half-to-even), fixed point."""
    scale = 10**digits
    t = x * scale
    q, r = divmod(t.numerator, t.denominator)
    # divmod floors, so 0 <= r < den; round half to even
    twice = 2 * r
    if twice > t.denominator or (twice == t.denominator and q % 2 == 1):
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class RealAlgebraicEnclosure:
    """One real root of `poly`, isolated in [lo, hi].

    Invariants: poly is square-free and primitive with positive leading
    coefficient; either lo == hi and poly(lo) == 0 (an exact rational root),
    or lo < hi, poly does not vanish at the endpoints, and the Sturm count
    of roots in (lo, hi] is exactly one.
    """

    poly: IntPolynomial
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.poly.is_zero or self.poly.degree < 1:
            raise ValueError("enclosure needs a nonconstant polynomial")
        if self.poly != self.poly.normalized():
            raise ValueError("defining polynomial must be primitive, lc > 0")
        if self.lo > self.hi:
            raise ValueError("need lo <= hi")
        if self.lo == self.hi:
            if self.poly.sign_at(self.lo) != 0:
                raise ValueError("point enclosure must sit on a root")
        else:
            if self.poly.sign_at(self.lo) == 0 or self.poly.sign_at(self.hi) == 0:
                raise ValueError("interval endpoints must not be roots")
            if count_roots_halfopen(sturm_chain(self.poly), self.lo, self.hi) != 1:
                raise ValueError("interval must isolate exactly one root")

    @classmethod
    def _trusted(cls, poly: IntPolynomial, lo: Fraction, hi: Fraction) -> "RealAlgebraicEnclosure":
        """Internal constructor for intervals whose invariant is already proved."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "poly", poly)
        object.__setattr__(obj, "lo", lo)
        object.__setattr__(obj, "hi", hi)
        return obj

    @classmethod
    def exact(cls, value) -> "RealAlgebraicEnclosure":
        v = Fraction(value)
        poly = IntPolynomial((-v.numerator, v.denominator)).normalized()
        return cls._trusted(poly, v, v)

    # -- basic geometry ----------------------------------------------------

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def rational_value(self) -> Fraction:
        if not self.is_point:
            raise ValueError("not an exact rational enclosure")
        return self.lo

    # -- refinement ----------------------------------------------------------

    def _bisect_once(self) -> "RealAlgebraicEnclosure":
        """Halve the interval by an exact sign test at the midpoint."""
        if self.is_point:
            return self
        m = self.midpoint
        sm = self.poly.sign_at(m)
        if sm == 0:
            return RealAlgebraicEnclosure._trusted(self.poly, m, m)
        # interval invariant gives a sign change across (lo, hi)
        if sm == self.poly.sign_at(self.lo):
            return RealAlgebraicEnclosure._trusted(self.poly, m, self.hi)
        return RealAlgebraicEnclosure._trusted(self.poly, self.lo, m)

    def refine(self, width) -> "RealAlgebraicEnclosure":
        """Shrink the isolating interval to at most `width` (same root)."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        enc = self
        while not enc.is_point and enc.width > width:
            enc = enc._bisect_once()
        return enc

    # -- exact comparisons ---------------------------------------------------

    def compare_rational(self, value) -> int:
        """Sign of (root - value), decided exactly."""
        q = Fraction(value)
        if self.is_point:
            return (self.lo > q) - (self.lo < q)
        enc = self
        while True:
            if q <= enc.lo:
                return 1
            if q >= enc.hi:
                return -1
            if enc.poly.sign_at(q) == 0:
                # q is a root of the defining polynomial inside the isolating
                # interval, hence the isolated root itself
                return 0
            enc = enc._bisect_once()

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def decimal(self, digits: int = 12) -> str:
        """Correctly rounded decimal string with `digits` fractional digits."""
        if digits < 0:
            raise ValueError("digits must be >= 0")
        if self.is_point:
            return _format_decimal(self.lo, digits)
        enc = self.refine(Fraction(1, 10 ** (digits + 2)))
        while _format_decimal(enc.lo, digits) != _format_decimal(enc.hi, digits):
            enc = enc.refine(enc.width / 16)
        return _format_decimal(enc.lo, digits)

    def __repr__(self) -> str:  # pragma: no cover
        if self.is_point:
            return f"RealAlgebraicEnclosure({self.lo} exactly)"
        return f"RealAlgebraicEnclosure({self.poly} on [{self.lo}, {self.hi}])"


# ---------------------------------------------------------------------------
# isolation
# ---------------------------------------------------------------------------

def isolate_real_roots(p: IntPolynomial) -> list[RealAlgebraicEnclosure]:
    """Disjoint isolating enclosures for every distinct real root of p.

    Bisection on Sturm counts over (-B, B] with B a strict root bound;
    exact rational roots hit by a bisection point collapse to point
    enclosures. Returned in increasing root order.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    sf = square_free_part(p)
    if sf.degree < 1:
        return []
    chain = sturm_chain(sf)
    bound = Fraction(root_bound(sf))
    out: list[RealAlgebraicEnclosure] = []

    def emit(a: Fraction, b: Fraction, count: int) -> None:
        if count == 0:
            return
        if count == 1:
            if sf.sign_at(b) == 0:
                out.append(RealAlgebraicEnclosure._trusted(sf, b, b))
                return
            if sf.sign_at(a) != 0:
                out.append(RealAlgebraicEnclosure._trusted(sf, a, b))
                return
            # a is a root (an earlier bisection point) but not the root of
            # this cell; split until the left endpoint moves off it
        m = (a + b) / 2
        left = count_roots_halfopen(chain, a, m)
        emit(a, m, left)
        emit(m, b, count - left)

    total = count_roots_halfopen(chain, -bound, bound)
    emit(-bound, bound, total)

    # separate closed intervals that touch at a shared endpoint
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i].hi >= out[i + 1].lo:
                out[i] = out[i]._bisect_once()
                out[i + 1] = out[i + 1]._bisect_once()
                changed = True
    return out


def isolate_largest_real_root(p: IntPolynomial) -> RealAlgebraicEnclosure | None:
    """Enclosure of the largest real root of p, or None if p has none."""
    if p.is_zero or p.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    sf = square_free_part(p)
    if sf.degree < 1:
        return None
    chain = sturm_chain(sf)
    bound = Fraction(root_bound(sf))
    a, b = -bound, bound
    count = count_roots_halfopen(chain, a, b)
    if count == 0:
        return None
    # shrink (a, b] keeping "no roots above b" until it isolates one root
    while True:
        if count == 1:
            if sf.sign_at(b) == 0:
                return RealAlgebraicEnclosure._trusted(sf, b, b)
            if sf.sign_at(a) != 0:
                return RealAlgebraicEnclosure._trusted(sf, a, b)
        m = (a + b) / 2
        upper = count_roots_halfopen(chain, m, b)
        if upper > 0:
            a, count = m, upper
        elif sf.sign_at(m) == 0:
            # m itself is the largest root
            return RealAlgebraicEnclosure._trusted(sf, m, m)
        else:
            b = m


# ---------------------------------------------------------------------------
# cross-enclosure comparisons
# ---------------------------------------------------------------------------

def _locate(enc: RealAlgebraicEnclosure, cells: list[RealAlgebraicEnclosure]) -> int:
    """Index of the cell holding enc's root; the root must be among the cells."""
    x = enc
    while True:
        hits = [i for i, c in enumerate(cells) if x.hi >= c.lo and c.hi >= x.lo]
        if len(hits) == 1:
            return hits[0]
        if not hits:
            raise ValueError("root does not belong to any cell")
        x = x._bisect_once()


def algebraic_equals(a: RealAlgebraicEnclosure, b: RealAlgebraicEnclosure) -> bool:
    """Exact equality of the two enclosed algebraic numbers."""
    from .polynomials import poly_gcd

    if a.is_point and b.is_point:
        return a.lo == b.lo
    if a.is_point:
        return b.compare_rational(a.lo) == 0
    if b.is_point:
        return a.compare_rational(b.lo) == 0
    common = poly_gcd(a.poly, b.poly)
    if common.degree < 1:
        return False
    chain = sturm_chain(common)
    if count_roots_halfopen(chain, a.lo, a.hi) != 1:
        return False
    if count_roots_halfopen(chain, b.lo, b.hi) != 1:
        return False
    cells = isolate_real_roots(common)
    return _locate(a, cells) == _locate(b, cells)


def algebraic_compare(a: RealAlgebraicEnclosure, b: RealAlgebraicEnclosure) -> int:
    """Sign of (a - b), decided exactly."""
    if b.is_point:
        return a.compare_rational(b.lo)
    if a.is_point:
        return -b.compare_rational(a.lo)
    if algebraic_equals(a, b):
        return 0
    x, y = a, b
    while True:
        if x.hi < y.lo:
            return -1
        if y.hi < x.lo:
            return 1
        x = x._bisect_once()
        y = y._bisect_once()


def rational_sqrt_bounds(v: Fraction, extra: int = 0) -> tuple[Fraction, Fraction]:
    """Rational a <= sqrt(v) <= b for v >= 0; `extra` decimal digits tighten."""
    if v < 0:
        raise ValueError("negative value")
    scale = 10**extra
    n = v.numerator * v.denominator * scale * scale
    root = math.isqrt(n)
    lo = Fraction(root, v.denominator * scale)
    hi = Fraction(root + 1, v.denominator * scale)
    if lo * lo == v:
        return lo, lo
    return lo, hi

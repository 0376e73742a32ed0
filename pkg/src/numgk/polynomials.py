"""Exact univariate polynomial arithmetic over the integers and rationals.

Everything here is exact: integer coefficient tuples, Fraction evaluation,
primitive-PRS gcds, positively-normalized Sturm chains, Euclidean resultants,
and the resultant construction whose roots are all pairwise products of the
roots of the input (the carrier of squared root moduli).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first.

    The zero polynomial is the empty tuple; otherwise the leading
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def content(self) -> int:
        return math.gcd(*(abs(c) for c in self.coeffs)) if self.coeffs else 0

    def primitive(self) -> "IntPolynomial":
        """Divide out the content, keeping the leading sign."""
        if self.is_zero:
            return self
        c = self.content()
        return IntPolynomial(tuple(x // c for x in self.coeffs))

    def normalized(self) -> "IntPolynomial":
        """Primitive part with positive leading coefficient."""
        p = self.primitive()
        if not p.is_zero and p.leading < 0:
            p = -p
        return p

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * x for x in self.coeffs))

    def shift_up(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def substitute_x_squared(self) -> "IntPolynomial":
        """Return p(x**2)."""
        out = [0] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return IntPolynomial(tuple(out))

    def __call__(self, x):
        """Evaluate by Horner; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Sign of p(x) for rational x, using pure integer arithmetic."""
        if self.is_zero:
            return 0
        n, d = x.numerator, x.denominator
        cs = self.coeffs
        acc = cs[-1]
        dp = 1
        for c in reversed(cs[:-1]):
            dp *= d
            acc = acc * n + c * dp
        return (acc > 0) - (acc < 0)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


X = IntPolynomial((0, 1))


# ---------------------------------------------------------------------------
# rational coefficient helpers (private: plain Fraction lists, lowest first)
# ---------------------------------------------------------------------------

def _q_trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _q_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    """Remainder of f by g over Q; g nonzero."""
    r = _q_trim(list(f))
    dg = len(g) - 1
    lg = g[-1]
    while r and len(r) - 1 >= dg:
        q = r[-1] / lg
        dr = len(r) - 1
        for i in range(dg):
            r[dr - dg + i] -= q * g[i]
        r.pop()
        r = _q_trim(r)
    return r


def clear_denominators(cs: Sequence[Fraction]) -> IntPolynomial:
    """Scale a rational polynomial by the positive lcm of denominators."""
    cs = [Fraction(c) for c in cs]
    L = 1
    for c in cs:
        L = L * c.denominator // math.gcd(L, c.denominator)
    return IntPolynomial(tuple(int(c * L) for c in cs))


def int_rem_scaled(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Remainder of f by g, rescaled to a primitive integer polynomial.

    The result equals the true rational remainder times a positive rational,
    so its sign structure is preserved (what Sturm chains need).
    """
    r = _q_rem([Fraction(c) for c in f.coeffs], [Fraction(c) for c in g.coeffs])
    return clear_denominators(r).primitive()


# ---------------------------------------------------------------------------
# gcd / square-free part
# ---------------------------------------------------------------------------

def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[x], positive leading coefficient."""
    a, b = p.normalized(), q.normalized()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = int_rem_scaled(a, b)
        a, b = b, r
    return a.normalized()


def exact_div(p: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Exact quotient p/g in Q[x], renormalized primitive over Z."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    f = [Fraction(c) for c in p.coeffs]
    gs = [Fraction(c) for c in g.coeffs]
    dg = len(gs) - 1
    df = len(f) - 1
    if df < dg:
        raise ValueError("division is not exact")
    qout = [Fraction(0)] * (df - dg + 1)
    r = f[:]
    for dr in range(df, dg - 1, -1):
        c = r[dr]
        if c == 0:
            continue
        q = c / gs[-1]
        qout[dr - dg] = q
        for i in range(dg + 1):
            r[dr - dg + i] -= q * gs[i]
    if any(c != 0 for c in r):
        raise ValueError("division is not exact")
    return clear_denominators(qout).normalized()


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """p with repeated roots collapsed to simple ones (primitive, lc > 0)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return IntPolynomial((1,))
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.normalized()
    return exact_div(p.normalized(), g)


def square_free_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition p ~ prod f_i ** i with the f_i square-free, coprime.

    Multiplicities come out of the gcd degree drops; only nonconstant
    factors are reported.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = p.normalized()
    if p.degree < 1:
        return []
    out: list[tuple[IntPolynomial, int]] = []
    g = poly_gcd(p, p.derivative())
    w = exact_div(p, g) if g.degree >= 1 else p
    i = 1
    while w.degree >= 1:
        y = poly_gcd(w, g)
        f = exact_div(w, y) if y.degree >= 1 else w
        if f.degree >= 1:
            out.append((f, i))
        w = y
        g = exact_div(g, y) if y.degree >= 1 else g
        i += 1
    return out


# ---------------------------------------------------------------------------
# Sturm chains and root counting
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8192)
def sturm_chain(p: IntPolynomial) -> tuple[IntPolynomial, ...]:
    """Sturm chain of a square-free polynomial (positively rescaled rows).

    p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i), each row scaled by a
    positive rational to primitive integers (sign-preserving).
    """
    chain = [p.primitive(), p.derivative().primitive()]
    while not chain[-1].is_zero and chain[-1].degree >= 0:
        r = int_rem_scaled(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
        if chain[-1].degree == 0:
            break
    return tuple(chain)


def sign_variations(signs: Iterable[int]) -> int:
    prev = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def variations_at(chain: Sequence[IntPolynomial], x: Fraction) -> int:
    return sign_variations(p.sign_at(x) for p in chain)


def count_roots_halfopen(chain: Sequence[IntPolynomial], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of the chain's square-free polynomial in (lo, hi]."""
    return variations_at(chain, lo) - variations_at(chain, hi)


def sturm_root_count(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi].

    Square-free decomposition is performed internally, so repeated roots
    count once.
    """
    if p.is_zero:
        raise ValueError("undefined root count")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    sf = square_free_part(p)
    if sf.degree < 1:
        return 0
    return count_roots_halfopen(sturm_chain(sf), lo, hi)


# ---------------------------------------------------------------------------
# root bounds
# ---------------------------------------------------------------------------

def _int_nthroot_ceil(num: int, den: int, k: int) -> int:
    """Smallest integer e >= (num/den) ** (1/k), for num, den, k positive."""
    if num == 0:
        return 0
    lo, hi = 0, 1
    while hi**k * den < num:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k * den >= num:
            hi = mid
        else:
            lo = mid + 1
    return lo


def root_bound(p: IntPolynomial) -> int:
    """Strict integer upper bound on the modulus of every root of p.

    Lagrange–Zassenhaus: |root| <= 2 * max_i (|a_i| / |lc|) ** (1/(d - i)).
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("root bound needs degree >= 1")
    d = p.degree
    lc = abs(p.leading)
    best = 0
    for i, c in enumerate(p.coeffs[:-1]):
        if c == 0:
            continue
        best = max(best, _int_nthroot_ceil(abs(c), lc, d - i))
    return 2 * best + 1


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------

def resultant(f_in: Sequence[Fraction], g_in: Sequence[Fraction]) -> Fraction:
    """Resultant of two polynomials over Q (Euclidean algorithm)."""
    f = _q_trim([Fraction(c) for c in f_in])
    g = _q_trim([Fraction(c) for c in g_in])
    if not f or not g:
        return Fraction(0)
    res = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return res * g[0] ** df
        if df == 0:
            return res * f[0] ** dg
        if df < dg:
            if (df * dg) % 2 == 1:
                res = -res
            f, g = g, f
            continue
        r = _q_rem(f, g)
        if not r:
            return Fraction(0)
        dr = len(r) - 1
        if (df * dg) % 2 == 1:
            res = -res
        res *= g[-1] ** (df - dr)
        f, g = g, r


def _newton_interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients (lowest first) of the interpolating polynomial."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[-1]]
    for i in range(n - 2, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * (len(poly) + 1)
        for t, c in enumerate(poly):
            new[t + 1] += c
            new[t] -= c * xs[i]
        new[0] += coef[i]
        poly = new
    return poly


def modulus_squared_poly(p: IntPolynomial) -> IntPolynomial:
    """Resultant r(z) = Res_x(p(x), x**d * p(z/x)), d = deg p.

    The roots of r are all pairwise products of roots of p, so the maximum
    real root of r equals the squared maximum root modulus of p (a root
    times its conjugate is real, and no pairwise product can exceed it).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree < 1:
        raise ValueError("constant polynomial")
    # strip zero roots: p = x**k * pt with pt(0) != 0
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    d = p.degree
    pt = IntPolynomial(p.coeffs[k:])
    dt = pt.degree
    if dt == 0:
        # pure monomial a*x^d: all roots zero, r = a^d * z^(d^2)
        a = pt.coeffs[0]
        return IntPolynomial((0,) * (d * d) + (a**d,))
    # r~(z) = Res_x(pt(x), q(x; z)) with q = sum_i a_i z^i x^(dt - i);
    # deg_z r~ = dt^2, leading coefficient lc(pt)^dt * a_dt^dt != 0.
    npts = dt * dt + 1
    xs: list[int] = [0]
    step = 1
    while len(xs) < npts:
        xs.append(step)
        if len(xs) < npts:
            xs.append(-step)
        step += 1
    f = [Fraction(c) for c in pt.coeffs]
    ys: list[Fraction] = []
    for z in xs:
        q = [Fraction(pt.coeffs[dt - j] * z ** (dt - j)) for j in range(dt + 1)]
        ys.append(resultant(f, q))
    cs = _newton_interpolate(xs, ys)
    assert all(c.denominator == 1 for c in cs), "resultant interpolation must be integral"
    rt = IntPolynomial(tuple(int(c) for c in cs))
    if k:
        # account for the k zero roots: factor a_dt^k * z^(d^2 - dt^2)
        rt = rt.scale(pt.leading**k).shift_up(d * d - dt * dt)
    return rt


def power_transform(p: IntPolynomial, k: int) -> IntPolynomial:
    """Polynomial whose roots are the k-th powers of the roots of p.

    Computed as Res_y(p(y), x - y**k) by evaluation/interpolation.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("need degree >= 1")
    if k < 1:
        raise ValueError("k must be positive")
    d = p.degree
    npts = d + 1
    xs: list[int] = [0]
    step = 1
    while len(xs) < npts:
        xs.append(step)
        if len(xs) < npts:
            xs.append(-step)
        step += 1
    f = [Fraction(c) for c in p.coeffs]
    ys = []
    for c in xs:
        g = [Fraction(0)] * (k + 1)
        g[0] = Fraction(c)
        g[k] = Fraction(-1)
        ys.append(resultant(f, g))
    cs = _newton_interpolate(xs, ys)
    return clear_denominators(cs).normalized()

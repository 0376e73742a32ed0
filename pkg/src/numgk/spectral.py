"""Certified spectral radii of exact rational matrices.

Pipeline: characteristic polynomial -> resultant whose roots are pairwise
eigenvalue products (its maximum real root is rho**2) -> isolate that root
-> certified square root. Every step is exact; rho = 1 is a decision, not a
tolerance.
"""

from __future__ import annotations

from fractions import Fraction

from .algebraic import RealAlgebraicEnclosure
from .matrices import Matrix, char_poly
from .minpoly import algebraic_sqrt, largest_real_root_minimal
from .polynomials import IntPolynomial, modulus_squared_poly, sturm_chain, variations_at


def spectral_radius(m: Matrix) -> RealAlgebraicEnclosure:
    """Enclosure of the maximum eigenvalue modulus, on its minimal polynomial.

    Supports exact comparison against any rational (compare_rational), so
    verdicts like rho = 1 or rho > 1 are certified. The zero matrix yields
    the exact zero enclosure.
    """
    p = char_poly(m)
    r = modulus_squared_poly(p)
    squared = largest_real_root_minimal(r)
    if squared is None:
        raise AssertionError("modulus polynomial always has a real root")
    return algebraic_sqrt(squared)


def spectral_radius_exceeds_one(m: Matrix) -> bool:
    """Exact test rho(m) > 1 without isolating the radius.

    rho**2 > 1 iff the pairwise-product resultant has a real root above 1,
    which one Sturm count decides.
    """
    p = char_poly(m)
    r = modulus_squared_poly(p)
    from .polynomials import root_bound, square_free_part

    sf = square_free_part(r)
    if sf.degree < 1:
        return False
    chain = sturm_chain(sf)
    bound = Fraction(root_bound(sf))
    if bound <= 1:
        return False
    return variations_at(chain, Fraction(1)) - variations_at(chain, bound) > 0

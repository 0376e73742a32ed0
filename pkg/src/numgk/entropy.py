"""Categorical entropy reports.

h_cat is never computed from its Ext-growth definition; it is evaluated
through the proved Gromov-Yomdin-type equalities (bielliptic surfaces via
the canonical cover and the abelian-surface equality), reported as a lower
bound log(rho) <= h_cat in general, or flagged as a known strict gap for
the spherical-twist-times-anti-ample-twist family on K3 covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .actions import ActionMatrix, GeneratorToken, Tag
from .algebraic import RealAlgebraicEnclosure
from .spectral import spectral_radius
from .surfaces import SurfaceKind

CITE_YOSHIOKA = "Yoshioka (2020), 'Categorical entropy for Fourier-Mukai transforms on generic abelian surfaces'"
CITE_OUCHI = "Ouchi (2020), 'On entropy of spherical twists'"
CITE_IKEDA = "Ikeda (2021), 'Mass growth of objects and categorical entropy'"


class GYStatus(str, Enum):
    EQUALITY = "equality"
    LOWER_BOUND_ONLY = "lower_bound_only"
    KNOWN_STRICT_GAP = "known_strict_gap"


@dataclass(frozen=True)
class EntropyReport:
    """Certified entropy evaluation of one autoequivalence action."""

    rho: RealAlgebraicEnclosure
    log_rho_decimal: str
    gy_status: GYStatus
    gy_detail: str
    positive: bool
    citations: tuple[str, ...]

    def to_json(self, digits: int = 12) -> dict:
        status = self.gy_status.value
        if self.gy_status == GYStatus.EQUALITY:
            status = f"equality({self.gy_detail})"
        return {
            "rho": {
                "min_poly": str(self.rho.poly),
                "interval": [str(self.rho.lo), str(self.rho.hi)],
                "decimal": self.rho.decimal(digits),
            },
            "log_rho": self.log_rho_decimal,
            "positive": self.positive,
            "gy_status": status,
            "citations": list(self.citations),
        }


def log_enclosure_decimal(rho: RealAlgebraicEnclosure, digits: int = 12) -> str:
    """Outward-rounded decimal of log(rho) from the exact enclosure.

    Exact when rho = 1 (the answer is the string of zeros); otherwise an
    mpmath interval evaluation of log over a refined rational bracket,
    tightened until the requested digits are determined.
    """
    from .algebraic import _format_decimal

    if rho.compare_rational(0) <= 0:
        raise ValueError("log needs a positive spectral radius")
    if rho.is_point and rho.lo == 1:
        return _format_decimal(Fraction(0), digits)
    from mpmath import iv

    enc = rho if rho.is_point else rho.refine(Fraction(1, 10 ** (digits + 4)))
    while not enc.is_point and enc.lo <= 0:
        enc = enc.refine(enc.width / 4)
    prec = (digits + 30) * 4
    while True:
        old = iv.prec
        try:
            iv.prec = prec
            lo = iv.mpf(enc.lo.numerator) / iv.mpf(enc.lo.denominator)
            hi = iv.mpf(enc.hi.numerator) / iv.mpf(enc.hi.denominator)
            val = iv.log(iv.mpf([lo.a, hi.b]))
            lo_f = _mpf_to_fraction(val.a)
            hi_f = _mpf_to_fraction(val.b)
        finally:
            iv.prec = old
        if _format_decimal(lo_f, digits) == _format_decimal(hi_f, digits):
            return _format_decimal(lo_f, digits)
        if not enc.is_point:
            enc = enc.refine(enc.width / 16)
        prec *= 2


def _mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpf: (-1)^sign * man * 2^exp."""
    from mpmath import mpf

    sign, man, exp, _ = mpf(x)._mpf_
    frac = Fraction(-man if sign else man)
    return frac * Fraction(2) ** exp


def _is_k3_gap_word(word: tuple[GeneratorToken, ...]) -> bool:
    return (
        len(word) == 2
        and word[0].tag == Tag.SPHERICAL_TWIST_O
        and word[1].tag == Tag.TENSOR_MINUS_H_K3
        and not word[0].inverted
        and not word[1].inverted
    )


def _is_lifted_gap_word(word: tuple[GeneratorToken, ...]) -> bool:
    return len(word) == 1 and word[0].tag == Tag.LIFT_BLOCK and _is_k3_gap_word(word[0].base_word)


def gy_gap_report(act: ActionMatrix, digits: int = 12) -> EntropyReport:
    """Entropy report with Gromov-Yomdin status for any supported model.

    Bielliptic and abelian-cover models get certified equality; the
    spherical-twist composite on K3 (and its Enriques-cover lifts) is the
    documented strict-gap family; everything else is a lower bound.
    """
    rho = spectral_radius(act.matrix)
    positive = rho.compare_rational(1) > 0
    kind = act.model.kind
    if kind == SurfaceKind.BIELLIPTIC:
        status, detail, cites = GYStatus.EQUALITY, "bielliptic", (CITE_YOSHIOKA,)
    elif kind == SurfaceKind.ABELIAN_BLOCK:
        status, detail, cites = GYStatus.EQUALITY, "abelian", (CITE_YOSHIOKA,)
    elif kind == SurfaceKind.K3 and _is_k3_gap_word(act.word):
        status, detail, cites = GYStatus.KNOWN_STRICT_GAP, CITE_OUCHI, (CITE_OUCHI,)
    elif kind == SurfaceKind.ENRIQUES_BLOCK and _is_lifted_gap_word(act.word):
        status, detail, cites = GYStatus.KNOWN_STRICT_GAP, CITE_OUCHI, (CITE_OUCHI,)
    else:
        status, detail, cites = GYStatus.LOWER_BOUND_ONLY, CITE_IKEDA, (CITE_IKEDA,)
    return EntropyReport(
        rho=rho,
        log_rho_decimal=log_enclosure_decimal(rho, digits),
        gy_status=status,
        gy_detail=detail,
        positive=positive,
        citations=cites,
    )


def entropy_bielliptic(act: ActionMatrix, digits: int = 12) -> EntropyReport:
    """Certified h_cat = log(rho) for an action on a bielliptic model."""
    if act.model.kind != SurfaceKind.BIELLIPTIC:
        raise ValueError("entropy_bielliptic needs a bielliptic model")
    return gy_gap_report(act, digits)


def yomdin_lower_bound(act: ActionMatrix) -> RealAlgebraicEnclosure:
    """Exact enclosure of rho; log of it is a lower bound for h_cat.

    log(rho) itself is transcendental, so the algebraic carrier rho is
    returned and the logarithm is rendered only as an outward-rounded
    decimal (log_enclosure_decimal).
    """
    return spectral_radius(act.matrix)

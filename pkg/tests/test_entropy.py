"""Entropy reports: equalities, lower bounds, known strict gaps."""

import json
import math
from fractions import Fraction

import pytest

from numgk.actions import compose, fm_token, parse_word, shift, tensor_token
from numgk.algebraic import algebraic_equals
from numgk.entropy import (
    CITE_IKEDA,
    CITE_OUCHI,
    CITE_YOSHIOKA,
    GYStatus,
    entropy_bielliptic,
    gy_gap_report,
    log_enclosure_decimal,
    yomdin_lower_bound,
)
from numgk.matrices import Matrix
from numgk.minpoly import algebraic_power
from numgk.spectral import spectral_radius
from numgk.surfaces import BIELLIPTIC_TABLE, bielliptic, cover_block_model, k3


def table2_action(t):
    m = bielliptic(t)
    return compose(parse_word("fm_p;tensorH(-1)", m), m)


class TestBielliptic:
    def test_type7_radius_and_log(self):
        rep = entropy_bielliptic(table2_action(7))
        assert rep.rho.poly.coeffs == (1, -34, 1)  # 17 + 12*sqrt(2)
        assert rep.gy_status == GYStatus.EQUALITY and rep.gy_detail == "bielliptic"
        assert rep.positive
        # independent float oracle for log(17 + 12*sqrt(2))
        assert abs(float(rep.log_rho_decimal) - math.log(17 + 12 * math.sqrt(2))) < 1e-9

    def test_identity_zero_entropy(self):
        rep = entropy_bielliptic(compose((), bielliptic(2)))
        assert rep.rho.is_point and rep.rho.lo == 1
        assert rep.log_rho_decimal == "0.000000000000"
        assert not rep.positive

    def test_type1_zero_entropy(self):
        rep = entropy_bielliptic(table2_action(1))
        assert rep.rho.is_point and rep.rho.lo == 1
        assert not rep.positive

    def test_positivity_split(self):
        for t in BIELLIPTIC_TABLE:
            rep = entropy_bielliptic(table2_action(t))
            assert rep.positive == (t >= 3)

    def test_wrong_model(self):
        K = k3(1)
        with pytest.raises(ValueError):
            entropy_bielliptic(compose((), K))


class TestYomdinBound:
    def test_unipotent_tensor_zero(self):
        m = bielliptic(1)
        enc = yomdin_lower_bound(compose((tensor_token(5, -3),), m))
        assert enc.is_point and enc.lo == 1  # log rho = 0

    def test_type4_composite(self):
        enc = yomdin_lower_bound(table2_action(4))
        assert enc.poly.coeffs == (1, -14, 1)  # 7 + 4*sqrt(3)
        assert abs(float(log_enclosure_decimal(enc, 12)) - math.log(7 + 4 * math.sqrt(3))) < 1e-9

    def test_shift_zero(self):
        enc = yomdin_lower_bound(shift(bielliptic(3)))
        assert enc.is_point and enc.lo == 1


class TestGapReports:
    def test_k3_gap_word(self):
        K = k3(1)
        rep = gy_gap_report(compose(parse_word("twistO;tensorHK3(-1)", K), K))
        assert rep.gy_status == GYStatus.KNOWN_STRICT_GAP
        assert rep.rho.is_point and rep.rho.lo == 1
        assert not rep.positive  # rho = 1; positivity of h_cat is the cited fact
        assert CITE_OUCHI in rep.citations

    def test_bielliptic_equality_type5(self):
        rep = gy_gap_report(table2_action(5))
        assert rep.gy_status == GYStatus.EQUALITY
        assert rep.rho.poly.coeffs == (1, -7, 1)  # (7 + 3*sqrt(5))/2
        assert abs(float(rep.rho.decimal(12)) - (7 + 3 * math.sqrt(5)) / 2) < 1e-9

    def test_enriques_lift_gap(self):
        cover, _ = cover_block_model(k3(1), 2, -Matrix.identity(2))
        act = compose(parse_word("twistO;tensorHK3(-1)", cover), cover)
        rep = gy_gap_report(act)
        assert rep.gy_status == GYStatus.KNOWN_STRICT_GAP
        assert rep.rho.is_point and rep.rho.lo == 1

    def test_other_k3_words_lower_bound(self):
        K = k3(1)
        rep = gy_gap_report(compose(parse_word("tensorHK3(-1)", K), K))
        assert rep.gy_status == GYStatus.LOWER_BOUND_ONLY
        assert CITE_IKEDA in rep.citations

    def test_abelian_block_equality(self):
        cover, _ = cover_block_model(bielliptic(3), 1, -Matrix.identity(1))
        act = compose(parse_word("fm_p;tensorH(-1)", cover), cover)
        rep = gy_gap_report(act)
        assert rep.gy_status == GYStatus.EQUALITY and rep.gy_detail == "abelian"
        assert CITE_YOSHIOKA in rep.citations
        assert rep.rho.poly.coeffs == (1, -14, 1)


class TestProperties:
    def test_yomdin_never_exceeds_equality_value(self):
        for t in (1, 3, 6):
            act = table2_action(t)
            assert algebraic_equals(yomdin_lower_bound(act), entropy_bielliptic(act).rho)

    def test_power_additivity(self):
        act = table2_action(3)
        rho = spectral_radius(act.matrix)
        for n in (2, 3):
            repeated = compose(act.word * n, act.model)
            assert algebraic_equals(spectral_radius(repeated.matrix), algebraic_power(rho, n))

    def test_radius_at_least_one_for_unit_det_words(self):
        import random

        rng = random.Random(7)
        m = bielliptic(4)
        toks = [fm_token(), tensor_token(-4, -2), tensor_token(1, 0)]
        for _ in range(10):
            word = tuple(rng.choice(toks) for _ in range(rng.randint(0, 4)))
            act = compose(word, m)
            assert abs(act.matrix.det()) == 1
            assert spectral_radius(act.matrix).compare_rational(1) >= 0

    def test_json_schema(self):
        rep = gy_gap_report(table2_action(3))
        doc = rep.to_json(12)
        assert set(doc) == {"rho", "log_rho", "positive", "gy_status", "citations"}
        assert set(doc["rho"]) == {"min_poly", "interval", "decimal"}
        assert doc["gy_status"] == "equality(bielliptic)"
        json.dumps(doc)  # serializable

    def test_log_decimal_digits(self):
        rep = entropy_bielliptic(table2_action(3), digits=6)
        assert rep.log_rho_decimal == f"{math.log(7 + 4 * math.sqrt(3)):.6f}"

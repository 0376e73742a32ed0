"""Surface lattice models: classification data, pairings, cover blocks."""

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from numgk.matrices import Matrix
from numgk.surfaces import (
    BIELLIPTIC_TABLE,
    NumClass,
    SurfaceKind,
    bielliptic,
    cover_block_model,
    euler_pairing,
    intersection,
    is_negative_definite,
    k3,
    mukai_pairing,
    parse_surface_spec,
    signature,
)


class TestBielliptic:
    def test_table_data(self):
        assert bielliptic(3).n == 4 and bielliptic(3).k == 1
        assert bielliptic(2).n == 2 and bielliptic(2).k == 2
        assert bielliptic(6).n == 3 and bielliptic(6).k == 3
        assert bielliptic(4).group_name == "Z/4Z x Z/2Z"
        assert bielliptic(7).group_name == "Z/6Z" and bielliptic(7).n == 6
        assert len(BIELLIPTIC_TABLE) == 7

    def test_basis_and_rank(self):
        m = bielliptic(1)
        assert m.rank == 4
        assert m.basis_labels == ("[S]", "A", "B", "[pt]")

    def test_bad_type(self):
        for bad in (0, 8, -1):
            with pytest.raises(ValueError):
                bielliptic(bad)


class TestIntersection:
    def test_AB(self):
        m = bielliptic(1)
        assert intersection(m, [0, 1, 0, 0], [0, 0, 1, 0]) == 1
        assert intersection(m, [0, 1, 0, 0], [0, 1, 0, 0]) == 0
        assert intersection(m, [0, 0, 1, 0], [0, 0, 1, 0]) == 0

    def test_polarization_self_intersection(self):
        for t, (n, k, _) in BIELLIPTIC_TABLE.items():
            m = bielliptic(t)
            assert intersection(m, [n, k], [n, k]) == 2 * n * k

    def test_non_divisor_rejected(self):
        m = bielliptic(1)
        with pytest.raises(ValueError):
            intersection(m, [1, 0, 0, 0], [0, 1, 0, 0])
        with pytest.raises(ValueError):
            intersection(m, [0, 1, 0, 5], [0, 1, 0, 0])

    def test_wrong_model(self):
        with pytest.raises(ValueError):
            intersection(k3(1), [1, 0], [0, 1])


class TestEulerPairing:
    def test_structure_point(self):
        m = bielliptic(5)
        assert euler_pairing(m, [1, 0, 0, 0], [0, 0, 0, 1]) == 1

    def test_AB_pairing(self):
        m = bielliptic(5)
        assert euler_pairing(m, [0, 1, 0, 0], [0, 0, 1, 0]) == -1

    def test_k3_spherical_class(self):
        K = k3(1)
        assert mukai_pairing(K, [1, 0, 1], [1, 0, 1]) == -2
        assert euler_pairing(K, [1, 0, 1], [1, 0, 1]) == 2

    def test_k3_mukai_formula(self):
        K = k3(3)
        # <v, w> = 2d m m' - r s' - s r'
        assert mukai_pairing(K, [1, 2, 3], [4, 5, 6]) == 2 * 3 * 2 * 5 - 1 * 6 - 3 * 4

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            euler_pairing(bielliptic(1), [1, 0, 0], [0, 0, 0, 1])

    @given(st.lists(st.integers(-9, 9), min_size=4, max_size=4), st.lists(st.integers(-9, 9), min_size=4, max_size=4))
    def test_symmetry_on_bielliptic(self, v, w):
        m = bielliptic(3)
        assert euler_pairing(m, v, w) == euler_pairing(m, w, v)

    def test_gram_is_antidiagonal(self):
        g = bielliptic(1).euler_gram()
        expected = Matrix.from_rows(
            [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]
        )
        assert g == expected

    def test_signatures(self):
        assert signature(bielliptic(1).euler_gram()) == (2, 2)
        for d in (1, 2, 3):
            assert signature(k3(d).mukai_gram()) == (2, 1)

    def test_numclass(self):
        v = NumClass.of([1, 0, 0, 0])
        assert euler_pairing(bielliptic(1), v, NumClass.of([0, 0, 0, 1])) == 1


class TestCoverBlocks:
    def test_rank6_cover(self):
        base = bielliptic(1)
        cover, pushpull = cover_block_model(base, 2, -Matrix.identity(2))
        assert cover.rank == 6
        assert cover.kind == SurfaceKind.ABELIAN_BLOCK
        assert pushpull == Matrix.identity(4).scale(2)  # ord(K_S) = 2

    def test_zero_ell_base_unchanged(self):
        base = bielliptic(3)
        cover, pushpull = cover_block_model(base, 0, None)
        assert cover.rank == base.rank
        assert cover.euler_gram() == base.euler_gram()
        assert pushpull == Matrix.identity(4).scale(4)

    def test_positive_definite_rejected(self):
        with pytest.raises(ValueError, match="negative definite"):
            cover_block_model(bielliptic(1), 1, Matrix.from_rows([[1]]))

    def test_nonsymmetric_rejected(self):
        g = Matrix.from_rows([[-2, 1], [0, -2]])
        with pytest.raises(ValueError, match="negative definite"):
            cover_block_model(bielliptic(1), 2, g)

    def test_enriques_cover_order_two(self):
        cover, pushpull = cover_block_model(k3(1), 2, -Matrix.identity(2))
        assert cover.kind == SurfaceKind.ENRIQUES_BLOCK
        assert cover.n == 2
        assert pushpull == Matrix.identity(3).scale(2)

    def test_block_gram_is_orthogonal_sum(self):
        g_k = Matrix.from_rows([[-2, 1], [1, -2]])
        cover, _ = cover_block_model(bielliptic(1), 2, g_k)
        g = cover.euler_gram()
        assert g.entry(4, 4) == -2 and g.entry(4, 5) == 1
        assert g.entry(0, 4) == 0 and g.entry(3, 5) == 0

    def test_no_towers(self):
        cover, _ = cover_block_model(k3(1), 1, -Matrix.identity(1))
        with pytest.raises(ValueError):
            cover_block_model(cover, 1, -Matrix.identity(1))

    def test_is_negative_definite(self):
        assert is_negative_definite(Matrix.from_rows([[-2, 1], [1, -2]]))
        assert not is_negative_definite(Matrix.from_rows([[-1, 0], [0, 1]]))
        assert not is_negative_definite(Matrix.from_rows([[0]]))


class TestSpecParsing:
    def test_specs(self):
        assert parse_surface_spec("bielliptic:3").type_id == 3
        assert parse_surface_spec("k3:d=2").d == 2
        e = parse_surface_spec("enriques:l=2")
        assert e.kind == SurfaceKind.ENRIQUES_BLOCK and e.ell == 2
        a = parse_surface_spec("abelian:type=3,l=1")
        assert a.kind == SurfaceKind.ABELIAN_BLOCK and a.base.type_id == 3

    def test_bad_specs(self):
        for bad in ("", "bielliptic", "bielliptic:9", "k3:d=0", "plane:1", "k3:d=x"):
            with pytest.raises(ValueError):
                parse_surface_spec(bad)


class TestSerialization:
    def test_documented_keys(self):
        doc = bielliptic(3).to_json()
        assert set(doc) == {"kind", "n", "k", "d", "l", "gram_K", "rank", "basis"}
        assert doc["rank"] == 4 and doc["basis"] == ["[S]", "A", "B", "[pt]"]

    def test_byte_stable(self):
        cover, _ = cover_block_model(k3(1), 1, -Matrix.identity(1))
        a = json.dumps(cover.to_json(), sort_keys=True)
        b = json.dumps(cover.to_json(), sort_keys=True)
        assert a == b
        assert json.loads(a)["gram_K"] == [["-1"]]
